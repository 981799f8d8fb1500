#ifndef MFQ_CHARS_HPP
#define MFQ_CHARS_HPP

#include <cstdint>
#include <vector>

#include "mfq/cyclotomic.hpp"
#include "mfq/errors.hpp"
#include "mfq/rings.hpp"

namespace mfq {

// Dirichlet character mod N in the Conrey parameterization chi_N(a, .).
// Values are stored as exponents of zeta_o (o = multiplicative order of chi);
// log[r] = -1 marks chi(r) = 0 (gcd(r, N) > 1). No floating point anywhere.
struct DirichletCharacter {
    u32 modulus = 1;
    u32 conrey = 1;
    u32 order = 1;
    std::vector<i64> log;  // length modulus, exponent in [0, order) or -1

    bool is_trivial() const { return order == 1; }
    // chi(-1): +1 (even) or -1 (odd)
    int parity() const {
        if (modulus <= 2) return 1;
        i64 t = log[modulus - 1];
        return (t == 0) ? 1 : -1;
    }
    i64 log_at(u64 r) const { return log[r % modulus]; }
};

// Build chi_N(a, .): discrete-log tables per prime-power component, CRT-combined.
// gcd(a, N) > 1 raises invalid_argument.
DirichletCharacter conrey_character(u32 N, u32 a);

// Pointwise product chi_N(a,.)*chi_N(b,.) = chi_N(ab,.) index helper.
inline u32 conrey_mul_index(u32 N, u32 a, u32 b) { return static_cast<u32>((u64)a * b % N); }
u32 conrey_inverse_index(u32 N, u32 a);

// Embedded value table over a ring: values[r] = zeta_image^log[r] (0 where
// chi vanishes). Builds the power table of zeta_image with at most order-1
// ring multiplications; zeta_image must have exact order chi.order.
template <class R>
struct EmbeddedCharacter {
    const DirichletCharacter* chi = nullptr;
    std::vector<typename R::Elem> values;  // length modulus
};

template <class R>
bool embedding_order_is(const R& ring, const typename R::Elem& zeta, u32 o) {
    // zeta^o == 1 and zeta^{o/p} != 1 for every prime p | o
    CountPause pause(ring.ops);
    auto pw = [&](u32 e) {
        auto r = ring.one();
        auto b = zeta;
        while (e) {
            if (e & 1) r = ring.mul(r, b);
            b = ring.mul(b, b);
            e >>= 1;
        }
        return r;
    };
    if (!ring.eq(pw(o), ring.one())) return false;
    u32 rest = o;
    for (u32 p = 2; p * p <= rest || (rest > 1 && p <= rest); ++p) {
        if (rest % p) continue;
        if (ring.eq(pw(o / p), ring.one())) return false;
        while (rest % p == 0) rest /= p;
        if (rest == 1) break;
        if (rest > 1 && p * p > rest) {  // remaining rest is prime
            if (ring.eq(pw(o / rest), ring.one())) return false;
            break;
        }
    }
    return true;
}

template <class R>
EmbeddedCharacter<R> embed_values(const R& ring, const DirichletCharacter& chi,
                                  const typename R::Elem& zeta_image) {
    {
        CountPause pause(ring.ops);
        if (!embedding_order_is(ring, zeta_image, chi.order))
            throw incompatible_prime_error("embed_values: zeta image does not have order " +
                                           std::to_string(chi.order));
    }
    std::vector<typename R::Elem> pw(chi.order);
    pw[0] = ring.one();
    for (u32 i = 1; i < chi.order; ++i) pw[i] = ring.mul(pw[i - 1], zeta_image);
    EmbeddedCharacter<R> out;
    out.chi = &chi;
    out.values.reserve(chi.modulus);
    for (u32 r = 0; r < chi.modulus; ++r)
        out.values.push_back(chi.log[r] < 0 ? ring.zero() : pw[static_cast<std::size_t>(chi.log[r])]);
    return out;
}

// Generalized Bernoulli number B_{k,chi} over an exact ring, from the
// generating function sum_a chi(a) t e^{at} / (e^{Nt} - 1) by truncated series
// arithmetic: numerator sum_a chi(a) e^{at}, denominator (e^{Nt}-1)/t, one
// series inversion, coefficient extraction times k!.
// R is QQ (order <= 2) or CycQ; chi values map through `value(exponent)`.
template <class R, class ValueFn>
typename R::Elem gen_bernoulli(const R& ring, const DirichletCharacter& chi, u32 k, ValueFn&& value) {
    using E = typename R::Elem;
    const u32 N = chi.modulus;
    const std::size_t l = k + 1;
    if (l > 19) throw capacity_error("gen_bernoulli: weight too large for factorial table");
    // denominator D(t) = (e^{Nt}-1)/t = sum_{i>=0} N^{i+1} t^i / (i+1)!
    std::vector<E> D(l), num(l, ring.zero());
    {
        E Npow = ring.from_index(N);
        u64 fact = 1;
        for (std::size_t i = 0; i < l; ++i) {
            fact *= (i + 1);
            D[i] = ring.div_small(Npow, fact);
            Npow = ring.mul(Npow, ring.from_index(N));
        }
    }
    // numerator sum_a chi(a) e^{at} truncated to t^k
    for (u32 a = 1; a <= N; ++a) {
        i64 t = chi.log[a % N];
        if (t < 0) continue;
        E va = value(static_cast<u64>(t));
        E apow = ring.one();
        u64 fact = 1;
        for (std::size_t i = 0; i < l; ++i) {
            if (i) {
                apow = ring.mul(apow, ring.from_index(a));
                fact *= i;
            }
            num[i] = ring.add(num[i], ring.div_small(ring.mul(va, apow), fact));
        }
    }
    // series inverse of D and product with num, coefficient of t^k, times k!
    std::vector<E> Dinv(l);
    auto d0i = ring.inv(D[0]);
    if (!d0i) throw divisibility_error(N);
    Dinv[0] = *d0i;
    for (std::size_t i = 1; i < l; ++i) {
        E acc = ring.zero();
        for (std::size_t j = 1; j <= i; ++j) acc = ring.add(acc, ring.mul(D[j], Dinv[i - j]));
        Dinv[i] = ring.neg(ring.mul(acc, Dinv[0]));
    }
    E ck = ring.zero();
    for (std::size_t j = 0; j <= k; ++j) ck = ring.add(ck, ring.mul(num[j], Dinv[k - j]));
    u64 kfact = 1;
    for (u32 i = 2; i <= k; ++i) kfact *= i;
    return ring.mul(ck, ring.from_index(kfact));
}

// Exact rational B_{k,chi} for characters of order <= 2 (values +-1).
mpq_class gen_bernoulli_rational(const DirichletCharacter& chi, u32 k);
// Exact cyclotomic B_{k,chi}; ring order must be a multiple of chi.order.
CycQ::Elem gen_bernoulli_cyclotomic(const CycQ& ring, const DirichletCharacter& chi, u32 k);
// B_{k,chi} in F_q; zeta must have order chi.order in F_q.
Fp64::Elem gen_bernoulli_modq(const Fp64& ring, const DirichletCharacter& chi, u32 k, Fp64::Elem zeta);

// Eisenstein constant term e_k^{phi,psi}: -(1/2) L(psi, 1-k) when phi has
// modulus 1, L(phi, 0) when psi has modulus 1 and k = 1, else 0; here
// L(chi, 1-k) = B_{k,chi}/k, the sign convention pinned by the bundled cusp
// decompositions (a_0 = 0, a_1 = 1).
Fp64::Elem eis_constant_term_modq(const Fp64& ring, u32 k, const DirichletCharacter& phi,
                                  Fp64::Elem zeta_phi, const DirichletCharacter& psi, Fp64::Elem zeta_psi);

// Exact version over Q(zeta); ring order must be a multiple of both orders.
CycQ::Elem eis_constant_term_cyclotomic(const CycQ& ring, u32 k, const DirichletCharacter& phi,
                                        const DirichletCharacter& psi);

}  // namespace mfq

#endif
