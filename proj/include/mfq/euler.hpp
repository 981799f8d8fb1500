#ifndef MFQ_EULER_HPP
#define MFQ_EULER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mfq/errors.hpp"
#include "mfq/rings.hpp"
#include "mfq/sieve.hpp"
#include "mfq/symfun.hpp"

// Expansion of an Euler product prod_p F_p(p^-s)^-1 into Dirichlet
// coefficients a_1..a_n. A provider is any callable (u64 p) -> FactorRepr<R>
// pulled once per prime in ascending order.

namespace mfq {

// Prime-power block a_p, a_{p^2}, ..., a_{p^emax} from one local factor.
// sigma input runs the division-free recurrence (min(e,d)-[e<=d] products per
// term); newton input runs k h_k = sum N_j h_{k-j} with one small division per
// term; complete input is a copy.
template <class R>
std::vector<typename R::Elem> primepower_block(const R& ring, const FactorRepr<R>& F, std::size_t e_max) {
    using E = typename R::Elem;
    switch (F.kind) {
        case ReprKind::complete: {
            std::vector<E> h(F.values.begin(), F.values.begin() + std::min(e_max, F.values.size()));
            while (h.size() < e_max) h.push_back(ring.zero());  // degenerate short input
            return h;
        }
        case ReprKind::sigma: {
            FactorRepr<R> hs = complete_from_poly(ring, F, e_max);
            return hs.values;
        }
        case ReprKind::newton: {
            FactorRepr<R> ext = F;
            if (ext.values.size() < e_max) ext = convert(ring, F, ReprKind::newton, e_max);
            FactorRepr<R> hs = poly_from_newton(ring, ext, e_max, +1);
            return hs.values;
        }
    }
    throw integrity_error("unreachable repr kind");
}

// Reference expansion in largest-prime-factor order; oracle for expand_precomp.
template <class R, class Provider>
std::vector<typename R::Elem> expand_reference(const R& ring, Provider&& provider, u64 n) {
    using E = typename R::Elem;
    if (n < 1) throw std::invalid_argument("expand_reference: need n >= 1");
    std::vector<E> a(n + 1, ring.zero());
    a[1] = ring.one();
    for (u32 p : primes_below(n + 1)) {
        std::size_t e_max = 0;
        for (u64 pe = p; pe <= n; pe *= p) ++e_max;
        FactorRepr<R> F;
        try {
            F = provider(p);
        } catch (const std::exception& e) {
            throw computation_error("provider failed at prime " + std::to_string(p) + ": " + e.what());
        }
        std::vector<E> h = primepower_block(ring, F, e_max);
        u64 pe = p;
        for (std::size_t e = 1; e <= e_max; ++e, pe *= p) a[pe] = h[e - 1];
    }
    for (const SmoothEntry& s : smooth_sieve_expand_order(n + 1)) a[s.k] = ring.mul(a[s.pe], a[s.m]);
    return a;
}

// Expansion with precomputed indices: one ring multiplication per composite
// non-primepower index. table must cover indices up to n (table.n >= n+1).
template <class R, class Provider>
std::vector<typename R::Elem> expand_precomp(const R& ring, Provider&& provider, const CoprimeTable& table,
                                             u64 n) {
    using E = typename R::Elem;
    if (n < 1) throw std::invalid_argument("expand_precomp: need n >= 1");
    if (table.n < n + 1) throw std::invalid_argument("expand_precomp: table too small");
    std::vector<E> a(n + 1, ring.zero());
    a[1] = ring.one();
    for (u32 p : table.primes) {
        if (p > n) break;
        std::size_t e_max = 0;
        for (u64 pe = p; pe <= n; pe *= p) ++e_max;
        FactorRepr<R> F;
        try {
            F = provider(static_cast<u64>(p));
        } catch (const std::exception& e) {
            throw computation_error("provider failed at prime " + std::to_string(p) + ": " + e.what());
        }
        if (e_max == 1) {
            // a_p is free: sigma_1 = N_1 = h_1
            a[p] = F.values.empty() ? ring.zero() : F.values[0];
            continue;
        }
        std::vector<E> h = primepower_block(ring, F, e_max);
        u64 pe = p;
        for (std::size_t e = 1; e <= e_max; ++e, pe *= p) a[pe] = h[e - 1];
    }
    const std::size_t cnt = table.dk.size();
    for (std::size_t i = 0; i < cnt; ++i) {
        u32 k = table.dk[i];
        if (k > n) break;
        a[k] = ring.mul(a[table.dpe[i]], a[table.dm[i]]);
    }
    return a;
}

// Dirichlet convolution of two coefficient vectors (index 1..n), O(n log n).
template <class R>
std::vector<typename R::Elem> dirichlet_convolve(const R& ring, const std::vector<typename R::Elem>& a,
                                                 const std::vector<typename R::Elem>& b, u64 n) {
    using E = typename R::Elem;
    std::vector<E> c(n + 1, ring.zero());
    for (u64 i = 1; i <= n; ++i) {
        if (ring.is_zero(a[i])) continue;
        for (u64 j = 1; i * j <= n; ++j) {
            if (ring.is_zero(b[j])) continue;
            c[i * j] = ring.add(c[i * j], ring.mul(a[i], b[j]));
        }
    }
    return c;
}

}  // namespace mfq

#endif
