#ifndef MFQ_EIS_HPP
#define MFQ_EIS_HPP

#include <cstdint>
#include <vector>

#include "mfq/chars.hpp"
#include "mfq/errors.hpp"
#include "mfq/rings.hpp"
#include "mfq/sieve.hpp"

// Coefficients of E_k^{phi,psi} = e_k + sum_{n>=1} (sum_{d|n} phi(n/d) psi(d) d^{k-1}) q^n
// through the Euler product L(phi,s) L(psi,s+1-k): per prime
//   c_p = p^{k-1} psi(p),  a_p = c_p + phi(p),  a_{p^e} = a_{p^{e-1}} c_p + phi(p^e mod N)
// and one multiplication per composite index from the coprime table.
//
// Ring-operation budget (indices 1..n): under n + o_phi + o_psi multiplications
// and under n additions; for k = 1 the per-prime multiplication is skipped so
// multiplications stay under n. Powers p^{k-1} are formed on machine indices
// (uncounted), as is index bookkeeping. The constant term at index 0 is
// computed with counters paused; it is outside that budget.

namespace mfq {

template <class R>
struct CoeffSeq {
    std::vector<typename R::Elem> a;  // index 0 = constant term slot
    u64 length() const { return a.empty() ? 0 : a.size() - 1; }
};

// p^e brought into the ring as an index power; not counted as ring work.
inline Fp64::Elem elem_pow_index(const Fp64& ring, u64 p, u32 e) { return ring.pow_index(p, e); }
template <class R>
typename R::Elem elem_pow_index(const R& ring, u64 p, u32 e) {
    CountPause pause(ring.ops);
    auto r = ring.one();
    auto b = ring.from_index(p);
    while (e) {
        if (e & 1) r = ring.mul(r, b);
        b = ring.mul(b, b);
        e >>= 1;
    }
    return r;
}

template <class R>
typename R::Elem eis_constant(const R& ring, u32 k, const EmbeddedCharacter<R>& phi,
                              const EmbeddedCharacter<R>& psi);

template <class R>
CoeffSeq<R> eisenstein_coeffs(const R& ring, u32 k, const EmbeddedCharacter<R>& phi,
                              const EmbeddedCharacter<R>& psi, u64 n, const CoprimeTable& table,
                              bool with_constant = true) {
    using E = typename R::Elem;
    if (n < 1) throw std::invalid_argument("eisenstein_coeffs: need n >= 1");
    if (k < 1) throw std::invalid_argument("eisenstein_coeffs: need weight k >= 1");
    if (table.n < n + 1) throw std::invalid_argument("eisenstein_coeffs: table too small");
    const u32 Nphi = phi.chi->modulus, Npsi = psi.chi->modulus;

    CoeffSeq<R> out;
    out.a.assign(n + 1, ring.zero());
    out.a[1] = ring.one();

    for (u32 p : table.primes) {
        if (p > n) break;
        // k = 1 skips the multiplication by p^{k-1} = 1 entirely
        E cp = (k == 1) ? psi.values[p % Npsi]
                        : ring.mul(elem_pow_index(ring, p, k - 1), psi.values[p % Npsi]);
        out.a[p] = ring.add(cp, phi.values[p % Nphi]);
        u64 pe = p, pm = p % Nphi;
        while (pe <= n / p) {
            pe *= p;
            pm = pm * p % Nphi;
            out.a[pe] = ring.add(ring.mul(out.a[pe / p], cp), phi.values[pm]);
        }
    }
    const std::size_t cnt = table.dk.size();
    for (std::size_t i = 0; i < cnt; ++i) {
        u32 kk = table.dk[i];
        if (kk > n) break;
        out.a[kk] = ring.mul(out.a[table.dpe[i]], out.a[table.dm[i]]);
    }
    if (with_constant) {
        CountPause pause(ring.ops);
        out.a[0] = eis_constant(ring, k, phi, psi);
    }
    return out;
}

inline Fp64::Elem eis_constant(const Fp64& ring, u32 k, const EmbeddedCharacter<Fp64>& phi,
                               const EmbeddedCharacter<Fp64>& psi) {
    // recover the zeta images from the embedded tables through a unit of log 1
    auto zeta_of = [&](const EmbeddedCharacter<Fp64>& c) -> Fp64::Elem {
        if (c.chi->order == 1) return ring.one();
        for (u32 r = 0; r < c.chi->modulus; ++r)
            if (c.chi->log[r] == 1) return c.values[r];
        throw integrity_error("eis_constant: embedded character has no log-1 unit");
    };
    return eis_constant_term_modq(ring, k, *phi.chi, zeta_of(phi), *psi.chi, zeta_of(psi));
}

inline CycQ::Elem eis_constant(const CycQ& ring, u32 k, const EmbeddedCharacter<CycQ>& phi,
                               const EmbeddedCharacter<CycQ>& psi) {
    return eis_constant_term_cyclotomic(ring, k, *phi.chi, *psi.chi);
}

// Direct divisor-sum oracle, O(n log n); test use only.
template <class R>
CoeffSeq<R> eisenstein_coeffs_naive(const R& ring, u32 k, const EmbeddedCharacter<R>& phi,
                                    const EmbeddedCharacter<R>& psi, u64 n, bool with_constant = true) {
    using E = typename R::Elem;
    if (n < 1) throw std::invalid_argument("eisenstein_coeffs_naive: need n >= 1");
    const u32 Nphi = phi.chi->modulus, Npsi = psi.chi->modulus;
    CoeffSeq<R> out;
    out.a.assign(n + 1, ring.zero());
    for (u64 d = 1; d <= n; ++d) {
        E pv = psi.values[d % Npsi];
        if (ring.is_zero(pv)) continue;
        E term0 = (k == 1) ? pv : ring.mul(pv, elem_pow_index(ring, d, k - 1));
        for (u64 m = d; m <= n; m += d) {
            E fv = phi.values[(m / d) % Nphi];
            if (ring.is_zero(fv)) continue;
            out.a[m] = ring.add(out.a[m], ring.mul(fv, term0));
        }
    }
    if (with_constant) {
        CountPause pause(ring.ops);
        out.a[0] = eis_constant(ring, k, phi, psi);
    }
    return out;
}

}  // namespace mfq

#endif
