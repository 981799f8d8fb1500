#ifndef MFQ_LPROD_HPP
#define MFQ_LPROD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mfq/errors.hpp"
#include "mfq/euler.hpp"
#include "mfq/rings.hpp"
#include "mfq/sieve.hpp"
#include "mfq/symfun.hpp"

// Coefficient-level operations on L-series given by per-prime Euler data.
// Bad primes never fall back to the naive construction: tensor products take
// explicit overrides (the Gross-Kudla helper builds the triple-product ones).

namespace mfq {

// Arithmetic object: good primes follow F_p = 1 - a_p T + sigma2(p) T^2 (or a
// fully explicit per-prime factor); bad primes carry explicit overrides.
template <class R>
struct ArithmeticObject {
    int degree = 2;
    u32 motivic_weight = 1;
    std::vector<u32> primes;                        // ascending, covering p < n
    std::vector<typename R::Elem> ap;               // parallel to primes
    std::vector<typename R::Elem> sigma2;           // parallel; chi(p) p^{k-1}
    std::map<u32, FactorRepr<R>> bad;               // explicit local factors

    bool is_bad(u32 p) const { return bad.count(p) != 0; }

    FactorRepr<R> local_factor(const R& ring, u64 p) const {
        auto it = bad.find(static_cast<u32>(p));
        if (it != bad.end()) return it->second;
        std::size_t lo = 0, hi = primes.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (primes[mid] < p)
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo >= primes.size() || primes[lo] != p)
            throw computation_error("arithmetic object: no local data at prime " + std::to_string(p));
        if (degree == 1) return make_sigma(ring, 1, std::vector<typename R::Elem>{ap[lo]});
        return make_sigma(ring, 2, std::vector<typename R::Elem>{ap[lo], sigma2[lo]});
    }
};

// L(f1 (+) f2 (+) ...): per-prime polynomial product, then one expansion.
template <class R>
std::vector<typename R::Elem> dirichlet_direct_sum(const R& ring,
                                                   const std::vector<const ArithmeticObject<R>*>& objs,
                                                   u64 n, const CoprimeTable& table) {
    auto provider = [&](u64 p) {
        FactorRepr<R> acc = objs[0]->local_factor(ring, p);
        for (std::size_t i = 1; i < objs.size(); ++i)
            acc = direct_sum(ring, acc, objs[i]->local_factor(ring, p), acc.degree + objs[i]->degree);
        return acc;
    };
    return expand_precomp(ring, provider, table, n);
}

// L(f1 (x) f2 (x) ...): Newton sums multiply componentwise; prime-power
// truncation at floor(log_p n). Bad primes must carry an override in
// `bad_overrides` whenever any factor is bad at p.
template <class R>
std::vector<typename R::Elem> dirichlet_tensor(const R& ring,
                                               const std::vector<const ArithmeticObject<R>*>& objs, u64 n,
                                               const CoprimeTable& table,
                                               const std::map<u32, FactorRepr<R>>& bad_overrides = {}) {
    auto provider = [&](u64 p) -> FactorRepr<R> {
        auto ov = bad_overrides.find(static_cast<u32>(p));
        if (ov != bad_overrides.end()) return ov->second;
        bool anybad = false;
        for (const auto* o : objs) anybad = anybad || o->is_bad(static_cast<u32>(p));
        if (anybad)
            throw computation_error("dirichlet_tensor: bad prime " + std::to_string(p) +
                                    " requires an explicit local factor override");
        std::size_t emax = 1;
        u64 pe = p;
        while (pe <= n / p) {
            pe *= p;
            ++emax;
        }
        std::vector<FactorRepr<R>> locs;
        locs.reserve(objs.size());
        for (const auto* o : objs) locs.push_back(o->local_factor(ring, p));
        return tensor_product(ring, locs, emax, ReprKind::newton);
    };
    return expand_precomp(ring, provider, table, n);
}

// Gross-Kudla local factor at p | N0 for three weight-2 newforms of common
// level: (1 - aT)(1 - paT)^2 with a = a_p(f1) a_p(f2) a_p(f3). The printed
// coefficient sequence of the level-35 worked example pins this shape
// (conductor exponent 8 - 3 = 5 per bad prime, matching N = N0^5).
template <class R>
FactorRepr<R> triple_product_bad_factor(const R& ring, const typename R::Elem& apf,
                                        const typename R::Elem& apg, const typename R::Elem& aph, u64 p) {
    using E = typename R::Elem;
    E a = ring.mul(ring.mul(apf, apg), aph);
    if (ring.is_zero(a)) return make_sigma(ring, 0, std::vector<E>{});
    // sigma_1 = a(2p+1), sigma_2 = p(p+2) a^2, sigma_3 = p^2 a^3
    E a2 = ring.mul(a, a);
    E s1 = ring.mul(ring.from_index(2 * p + 1), a);
    E s2 = ring.mul(ring.from_index(p * (p + 2)), a2);
    E s3 = ring.mul(ring.from_index(p * p), ring.mul(a2, a));
    return make_sigma(ring, 3, std::vector<E>{s1, s2, s3});
}

// L(Sym^k f): per-prime symmetric power, truncated, then one expansion.
template <class R>
std::vector<typename R::Elem> dirichlet_sym_power(const R& ring, const ArithmeticObject<R>& obj, u32 k,
                                                  u64 n, const CoprimeTable& table) {
    if (k == 0) throw std::invalid_argument("dirichlet_sym_power: need k >= 1");
    auto provider = [&](u64 p) -> FactorRepr<R> {
        FactorRepr<R> F = obj.local_factor(ring, p);
        if (k == 1) return F;
        std::size_t emax = 1;
        u64 pe = p;
        while (pe <= n / p) {
            pe *= p;
            ++emax;
        }
        return sym_power(ring, F, k, emax, ReprKind::newton);
    };
    return expand_precomp(ring, provider, table, n);
}

}  // namespace mfq

#endif
