#ifndef MFQ_BGFORM_HPP
#define MFQ_BGFORM_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mfq/chars.hpp"
#include "mfq/eis.hpp"
#include "mfq/errors.hpp"
#include "mfq/ntt.hpp"
#include "mfq/numring.hpp"
#include "mfq/rings.hpp"
#include "mfq/sieve.hpp"

namespace mfq {

// One product term E_l^{phi_i,phi_j}|B_d * E_{k-l}^{phi_i2,phi_j2}|B_d2;
// the second factor is absent when l = k. Indices are 1-based into the
// character list, matching the tuple notation of the file format.
struct ProductTerm {
    u32 l, i, j, i2, j2, d, d2;
};

// Matrix entry: a rational, or a rational polynomial in zeta_{order}
// (num / den evaluated at the chosen root of unity).
struct MatrixEntry {
    bool cyclotomic = false;
    mpq_class rat;
    u32 zeta_order = 1;
    std::vector<mpq_class> num, den;  // den empty = 1
};

// Eisenstein-product decomposition of an eigenform: characters, product
// terms, an integral power basis of Z[f] given by a monic minimal polynomial,
// the coefficient matrix B (d x m, rows = basis coordinates), and a short
// exact header a_1..a_t used for self-certification.
struct BGDecomposition {
    u32 weight = 0;
    u32 level = 0;
    std::vector<DirichletCharacter> chars;
    std::vector<ProductTerm> products;
    std::vector<mpq_class> minpoly;             // c_0..c_d, monic integral
    std::vector<std::string> basis_names;
    std::vector<std::vector<MatrixEntry>> matrix;  // d rows, m columns
    std::vector<std::vector<mpq_class>> header;    // a_1..a_t on the basis

    std::size_t basis_degree() const { return minpoly.size() - 1; }
    u32 zeta_lcm() const;  // lcm of character orders and entry zeta orders
    std::string source;    // file path, for error messages
};

BGDecomposition load_decomposition(const std::string& path);
BGDecomposition parse_decomposition(std::istream& in, const std::string& name);

// Decomposition bound to one FFT prime: embedded character tables and the
// matrix reduced mod q. Construction recomputes a_1..a_t and insists they
// reproduce the header (integrity_error otherwise).
struct PreparedDecomposition {
    const BGDecomposition* dec = nullptr;
    FftPrime prime;
    Fp64 ring;
    std::vector<EmbeddedCharacter<Fp64>> chars;
    std::vector<std::vector<u64>> matrix_modq;  // d x m

    PreparedDecomposition(const BGDecomposition& d, const FftPrime& f);
};

// Smallest usable FFT prime for this decomposition at the given length:
// advances past primes rejected by self-certification (e.g. the basis
// minimal polynomial has no root pattern compatible mod q never happens in
// coordinate form, but a bad q could still fail a divisibility).
FftPrime choose_prime(const BGDecomposition& dec, u64 n, u32 min_bits = 53, u64 lower_bound = 0,
                      u32 max_attempts = 32);

enum class CoefMode { primes_only, all };

// Residues of the basis coordinates a_{m,i} mod q for the requested indices.
struct ModqCoefficients {
    u64 q = 0;
    CoefMode mode = CoefMode::primes_only;
    std::vector<u32> index;               // prime list, or 1..n
    std::vector<std::vector<u64>> rows;   // basis_degree rows over index
};

// The whole pipeline: Eisenstein series via the Euler product, dilation,
// NTT products, matrix combination. threads > 1 distributes product terms.
ModqCoefficients mf_coefficients(const PreparedDecomposition& pd, u64 n, CoefMode mode, u32 threads = 1);

// Pure index dilation: out_m = seq_{m/d} when d | m, else 0. The d^{k/2}
// scalar of the expansion-operator normalization is the file's business.
template <class E>
std::vector<E> expand_operator(const std::vector<E>& seq, u64 d, u64 n, const E& zero) {
    std::vector<E> out(n + 1, zero);
    for (u64 m = 0; m * d <= n && m < seq.size(); ++m) out[m * d] = seq[m];
    return out;
}

// max |Omega^{-1}| over the complex embedding matrix of the power basis;
// outward-rounded. precision_error when roots cannot be certified.
double hasse_bound(const std::vector<mpq_class>& minpoly);

// Balanced lift of one residue; caller checked 2 bound <= q-1.
i64 lift_balanced_residue(u64 q, u64 r);

// Lift all coordinate residues of prime-indexed coefficients; requires
// 2 p^{(k-1)/2} B <= (q-1)/2 at every index (precision_error names the first
// failing index otherwise).
std::vector<std::vector<i64>> lift_prime_coefficients(const ModqCoefficients& mc, u32 weight, double hasse_B);

// Balanced CRT reconstruction across runs at pairwise distinct primes;
// integrity_error when a reconstructed value exceeds the stated bound.
std::vector<std::vector<mpz_class>> crt_combine(const std::vector<ModqCoefficients>& runs, u32 weight,
                                                double hasse_B);

// Full multiplicative extension: from exact a_p at p <= n (and explicit
// bad-prime factors 1 - a_p T at p | level) to a_1..a_n over Z[y]/minpoly.
std::vector<NumberRingZ::Elem> multiplicative_extend(const NumberRingZ& ring,
                                                     const std::vector<u32>& primes,
                                                     const std::vector<NumberRingZ::Elem>& ap,
                                                     const std::map<u32, NumberRingZ::Elem>& bad_ap,
                                                     u32 weight, u32 level, u64 n, const CoprimeTable& table);

}  // namespace mfq

#endif
