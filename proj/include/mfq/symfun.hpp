#ifndef MFQ_SYMFUN_HPP
#define MFQ_SYMFUN_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mfq/errors.hpp"
#include "mfq/rings.hpp"

// Symmetric-function calculus on Euler factors. A local factor
// P(T) = prod (1 - alpha_i T) of degree d is carried in one of three
// coordinate systems:
//   sigma:    P(T) = sum_k (-1)^k s_k T^k, values = (s_1..s_d)
//   newton:   power sums N_k = sum alpha_i^k, values = (N_1..N_l)
//   complete: h_k = coefficients of 1/P(T), values = (h_1..h_l)
// Conversions use the quadratic recurrences; cost O(l*min(l,d)).

namespace mfq {

enum class ReprKind { sigma, newton, complete };

template <class R>
struct FactorRepr {
    ReprKind kind = ReprKind::sigma;
    int degree = 0;                       // declared degree of P
    std::vector<typename R::Elem> values; // values[i-1] = s_i / N_i / h_i
};

template <class R>
FactorRepr<R> make_sigma(const R&, int degree, std::vector<typename R::Elem> vals) {
    return FactorRepr<R>{ReprKind::sigma, degree, std::move(vals)};
}

// s_i with zero padding past the stored length (s_i = 0 for i > d).
template <class R>
typename R::Elem sigma_at(const R& ring, const FactorRepr<R>& P, std::size_t i) {
    return i == 0 ? ring.one() : (i <= P.values.size() ? P.values[i - 1] : ring.zero());
}

// N(P,T) = -P'/P: N_k from sigma by the twin of (k h_k = sum N_j h_{k-j}).
template <class R>
FactorRepr<R> newton_from_poly(const R& ring, const FactorRepr<R>& P, std::size_t l) {
    using E = typename R::Elem;
    const std::size_t d = static_cast<std::size_t>(P.degree);
    std::vector<E> N(l);
    for (std::size_t k = 1; k <= l; ++k) {
        // N_k = (-1)^{k-1} k s_k + sum_{j=1}^{k-1} (-1)^{k-1-j} s_{k-j} N_j
        E acc = ring.zero();
        bool first = true;
        std::size_t jlo = k > d ? k - d : 1;
        for (std::size_t j = jlo; j < k; ++j) {
            E t = ring.mul(sigma_at(ring, P, k - j), N[j - 1]);
            if ((k - 1 - j) & 1) t = ring.neg(t);
            acc = first ? t : ring.add(acc, t);
            first = false;
        }
        if (k <= d) {
            E t = ring.mul(sigma_at(ring, P, k), ring.from_index(k));
            if ((k - 1) & 1) t = ring.neg(t);
            acc = first ? t : ring.add(acc, t);
            first = false;
        }
        N[k - 1] = first ? ring.zero() : acc;
    }
    return FactorRepr<R>{ReprKind::newton, P.degree, std::move(N)};
}

// P(T)^{+-1} = exp(-+ sum N_k T^k / k): sign -1 gives sigma coefficients of P,
// sign +1 gives complete sums h_k. Needs 1..l invertible (divisibility_error
// reports the first failing k otherwise).
template <class R>
FactorRepr<R> poly_from_newton(const R& ring, const FactorRepr<R>& N, std::size_t l, int sign) {
    using E = typename R::Elem;
    std::vector<E> out(l);
    const std::size_t avail = N.values.size();
    // h-branch:   k h_k = sum_{j=1}^k N_j h_{k-j}
    // sigma-branch: k s_k = sum_{j=1}^k (-1)^{j+1} N_j s_{k-j}
    std::vector<E> full(l + 1);
    full[0] = ring.one();
    for (std::size_t k = 1; k <= l; ++k) {
        if (k == 1) {  // h_1 = sigma_1 = N_1, no division
            full[1] = avail >= 1 ? N.values[0] : ring.zero();
            out[0] = full[1];
            continue;
        }
        E acc = ring.zero();
        bool first = true;
        for (std::size_t j = 1; j <= std::min(k, avail); ++j) {
            E t = (k == j) ? N.values[j - 1] : ring.mul(N.values[j - 1], full[k - j]);
            if (sign < 0 && ((j + 1) & 1)) t = ring.neg(t);
            acc = first ? t : ring.add(acc, t);
            first = false;
        }
        full[k] = ring.div_small(first ? ring.zero() : acc, k);
        out[k - 1] = full[k];
    }
    int deg = sign < 0 ? N.degree : N.degree;
    return FactorRepr<R>{sign < 0 ? ReprKind::sigma : ReprKind::complete, deg, std::move(out)};
}

// h_e from sigma via sum_{i=0}^{e} (-1)^i h_{e-i} s_i = 0: division-free,
// valid over any ring. min(e,d) - [e<=d] multiplications per term.
template <class R>
FactorRepr<R> complete_from_poly(const R& ring, const FactorRepr<R>& P, std::size_t l) {
    using E = typename R::Elem;
    const std::size_t d = static_cast<std::size_t>(P.degree);
    std::vector<E> h(l + 1);
    h[0] = ring.one();
    for (std::size_t e = 1; e <= l; ++e) {
        E acc = ring.zero();
        bool first = true;
        for (std::size_t i = 1; i <= std::min(e, d); ++i) {
            E t = (i == e) ? sigma_at(ring, P, i) : ring.mul(sigma_at(ring, P, i), h[e - i]);
            if ((i + 1) & 1) t = ring.neg(t);
            acc = first ? t : ring.add(acc, t);
            first = false;
        }
        h[e] = first ? ring.zero() : acc;
    }
    h.erase(h.begin());
    return FactorRepr<R>{ReprKind::complete, P.degree, std::move(h)};
}

namespace detail {
template <class R>
FactorRepr<R> sigma_from_complete(const R& ring, const FactorRepr<R>& H, std::size_t l);

template <class R>
FactorRepr<R> to_newton(const R& ring, const FactorRepr<R>& P, std::size_t l) {
    switch (P.kind) {
        case ReprKind::newton: {
            FactorRepr<R> r = P;
            if (r.values.size() > l) r.values.resize(l);
            if (r.values.size() < l) {
                // extend through the degree-d recurrence given by the polynomial
                if (r.values.size() < static_cast<std::size_t>(r.degree))
                    throw std::invalid_argument("newton extension needs N_1..N_degree");
                FactorRepr<R> sig = poly_from_newton(ring, r, r.degree, -1);
                return newton_from_poly(ring, sig, l);
            }
            return r;
        }
        case ReprKind::sigma:
            return newton_from_poly(ring, P, l);
        case ReprKind::complete: {
            // N(P,T) = H'(P,T)/H(P,T): same recurrence with h in place of sigma
            // (go through sigma for clarity; cost is the same order)
            if (l > P.values.size() && P.values.size() < static_cast<std::size_t>(P.degree))
                throw std::invalid_argument("complete-sum extension needs h_1..h_degree");
            FactorRepr<R> sig = sigma_from_complete(ring, P, std::min<std::size_t>(P.degree, P.values.size()));
            return newton_from_poly(ring, sig, l);
        }
    }
    throw integrity_error("unreachable repr kind");
}

// sigma from complete sums via the same alternating recurrence (division-free).
template <class R>
FactorRepr<R> sigma_from_complete(const R& ring, const FactorRepr<R>& H, std::size_t l) {
    using E = typename R::Elem;
    std::vector<E> s(l + 1);
    s[0] = ring.one();
    auto h_at = [&](std::size_t i) -> E {
        return i == 0 ? ring.one() : (i <= H.values.size() ? H.values[i - 1] : ring.zero());
    };
    for (std::size_t e = 1; e <= l; ++e) {
        E acc = ring.zero();
        bool first = true;
        for (std::size_t i = 1; i <= e; ++i) {
            E t = (i == e) ? h_at(i) : ring.mul(h_at(i), s[e - i]);
            if ((i + 1) & 1) t = ring.neg(t);
            acc = first ? t : ring.add(acc, t);
            first = false;
        }
        s[e] = first ? ring.zero() : acc;
    }
    s.erase(s.begin());
    return FactorRepr<R>{ReprKind::sigma, H.degree, std::move(s)};
}
}  // namespace detail

template <class R>
FactorRepr<R> convert(const R& ring, const FactorRepr<R>& P, ReprKind to, std::size_t l) {
    if (P.kind == to) {
        FactorRepr<R> r = P;
        if (r.values.size() > l) r.values.resize(l);
        if (r.values.size() == l) return r;
    }
    switch (to) {
        case ReprKind::newton:
            return detail::to_newton(ring, P, l);
        case ReprKind::sigma:
            if (P.kind == ReprKind::complete) return detail::sigma_from_complete(ring, P, l);
            return poly_from_newton(ring, detail::to_newton(ring, P, std::max<std::size_t>(l, 1)), l, -1);
        case ReprKind::complete:
            if (P.kind == ReprKind::sigma) return complete_from_poly(ring, P, l);
            return poly_from_newton(ring, detail::to_newton(ring, P, std::max<std::size_t>(l, 1)), l, +1);
    }
    throw integrity_error("unreachable repr kind");
}

// h_k as a sum over partitions of k (Newton monomials); cross-check and
// small-k fast path. Needs k! invertible.
template <class R>
typename R::Elem h_from_partitions(const R& ring, const FactorRepr<R>& N, std::size_t k) {
    using E = typename R::Elem;
    if (N.kind != ReprKind::newton) throw std::invalid_argument("h_from_partitions: newton input required");
    if (N.values.size() < k) throw std::invalid_argument("h_from_partitions: need N_1..N_k");
    E total = ring.zero();
    // enumerate multiplicities m_i >= 0 with sum i*m_i = k, largest part first
    std::vector<u64> mult(k + 1, 0);
    auto rec = [&](auto&& self, std::size_t part, std::size_t rem) -> void {
        if (rem == 0) {
            E num = ring.one();
            u64 den = 1;
            for (std::size_t i = 1; i <= k; ++i) {
                for (u64 c = 0; c < mult[i]; ++c) {
                    num = ring.mul(num, N.values[i - 1]);
                    den *= i;
                    den *= (c + 1);
                }
            }
            total = ring.add(total, ring.div_small(num, den));
            return;
        }
        if (part == 0) return;
        for (u64 c = 0; c * part <= rem; ++c) {
            mult[part] = c;
            self(self, part - 1, rem - c * part);
        }
        mult[part] = 0;
    };
    rec(rec, k, k);
    return total;
}

// Tensor product of factors: Newton sums multiply componentwise.
template <class R>
FactorRepr<R> tensor_product(const R& ring, const std::vector<FactorRepr<R>>& factors, std::size_t l,
                             ReprKind out_kind = ReprKind::sigma) {
    using E = typename R::Elem;
    std::vector<E> N(l, ring.one());
    int deg = 1;
    for (const auto& f : factors) {
        FactorRepr<R> Nf = convert(ring, f, ReprKind::newton, l);
        for (std::size_t k = 0; k < l; ++k) N[k] = ring.mul(N[k], Nf.values[k]);
        deg *= f.degree;
    }
    FactorRepr<R> out{ReprKind::newton, deg, std::move(N)};
    if (out_kind == ReprKind::newton) return out;
    return convert(ring, out, out_kind, l);
}

// k-th root power: N_j(P^{o k}) = N_{jk}(P), a stride sample.
template <class R>
FactorRepr<R> root_power(const R& ring, const FactorRepr<R>& P, std::size_t exp, std::size_t l,
                         ReprKind out_kind = ReprKind::sigma) {
    using E = typename R::Elem;
    FactorRepr<R> N = convert(ring, P, ReprKind::newton, l * exp);
    std::vector<E> S(l);
    for (std::size_t j = 1; j <= l; ++j) S[j - 1] = N.values[j * exp - 1];
    FactorRepr<R> out{ReprKind::newton, P.degree, std::move(S)};
    if (out_kind == ReprKind::newton) return out;
    return convert(ring, out, out_kind, l);
}

// Symmetric power: N_i(Sym^k P) = h_k(P^{o i}).
template <class R>
FactorRepr<R> sym_power(const R& ring, const FactorRepr<R>& P, std::size_t k, std::size_t l,
                        ReprKind out_kind = ReprKind::sigma) {
    using E = typename R::Elem;
    if (k == 0) {  // Sym^0 P = 1 - T
        FactorRepr<R> one{ReprKind::newton, 1, std::vector<E>(l, ring.one())};
        return out_kind == ReprKind::newton ? one : convert(ring, one, out_kind, l);
    }
    FactorRepr<R> M = convert(ring, P, ReprKind::newton, k * l);
    std::vector<E> N(l);
    for (std::size_t i = 1; i <= l; ++i) {
        std::vector<E> stride(k);
        for (std::size_t j = 1; j <= k; ++j) stride[j - 1] = M.values[j * i - 1];
        FactorRepr<R> Ms{ReprKind::newton, P.degree, std::move(stride)};
        FactorRepr<R> hs = poly_from_newton(ring, Ms, k, +1);
        N[i - 1] = hs.values[k - 1];
    }
    // degree binom(d+k-1, k)
    u64 deg = 1;
    for (std::size_t i = 1; i <= k; ++i) deg = deg * (P.degree + i - 1) / i;
    FactorRepr<R> out{ReprKind::newton, static_cast<int>(deg), std::move(N)};
    if (out_kind == ReprKind::newton) return out;
    return convert(ring, out, out_kind, l);
}

// Direct sum: (P (+) Q)(T) = P(T) Q(T); truncated polynomial product.
template <class R>
FactorRepr<R> direct_sum(const R& ring, const FactorRepr<R>& P, const FactorRepr<R>& Q, std::size_t l) {
    using E = typename R::Elem;
    FactorRepr<R> Ps = convert(ring, P, ReprKind::sigma, std::min<std::size_t>(l, P.degree));
    FactorRepr<R> Qs = convert(ring, Q, ReprKind::sigma, std::min<std::size_t>(l, Q.degree));
    std::size_t dl = std::min<std::size_t>(l, P.degree + Q.degree);
    std::vector<E> out(dl, ring.zero());
    // signed coefficient arrays: c_k = (-1)^k s_k
    auto coef = [&](const FactorRepr<R>& F, std::size_t i) -> E {
        E v = sigma_at(ring, F, i);
        return (i & 1) ? ring.neg(v) : v;
    };
    for (std::size_t k = 1; k <= dl; ++k) {
        E acc = ring.zero();
        bool first = true;
        for (std::size_t i = 0; i <= k; ++i) {
            if (i > static_cast<std::size_t>(P.degree) || k - i > static_cast<std::size_t>(Q.degree)) continue;
            E t = (i == 0) ? coef(Qs, k) : (i == k ? coef(Ps, k) : ring.mul(coef(Ps, i), coef(Qs, k - i)));
            acc = first ? t : ring.add(acc, t);
            first = false;
        }
        out[k - 1] = (k & 1) ? ring.neg(acc) : acc;  // back to sigma convention
    }
    return FactorRepr<R>{ReprKind::sigma, P.degree + Q.degree, std::move(out)};
}

// Rankin-Selberg numerator: A(T) with sum_k prod_i h_k(P_i) T^k = A(T) / (tensor P_i)(T).
// deg A < prod d_i; cancellation of every term above that degree is checked up
// to l_max and a failure raises integrity_error (it signals an arithmetic bug).
// Returned as plain polynomial coefficients A_0..A_D (A_0 = 1).
template <class R>
std::vector<typename R::Elem> rankin_numerator(const R& ring, const std::vector<FactorRepr<R>>& factors,
                                               std::size_t l_max) {
    using E = typename R::Elem;
    u64 D = 1;
    for (const auto& f : factors) D *= static_cast<u64>(f.degree);
    if (l_max < D) throw std::invalid_argument("rankin_numerator: l_max below product degree");

    // pointwise product of complete sums, h_0 = 1
    std::vector<E> hprod(l_max + 1, ring.one());
    for (const auto& f : factors) {
        FactorRepr<R> h = convert(ring, f, ReprKind::complete, l_max);
        for (std::size_t k = 1; k <= l_max; ++k) hprod[k] = ring.mul(hprod[k], h.values[k - 1]);
    }
    // tensor polynomial, full degree
    FactorRepr<R> tp = tensor_product(ring, factors, D, ReprKind::sigma);
    std::vector<E> tpc(D + 1);
    tpc[0] = ring.one();
    for (std::size_t i = 1; i <= D; ++i) {
        tpc[i] = sigma_at(ring, tp, i);
        if (i & 1) tpc[i] = ring.neg(tpc[i]);
    }
    // A = hprod * tensorpoly, truncated to l_max; entries above D must vanish
    std::vector<E> A(l_max + 1, ring.zero());
    for (std::size_t i = 0; i <= l_max; ++i) {
        for (std::size_t j = 0; j <= D && i + j <= l_max; ++j) {
            if (ring.is_zero(tpc[j])) continue;
            A[i + j] = ring.add(A[i + j], ring.mul(hprod[i], tpc[j]));
        }
    }
    for (std::size_t i = D; i <= l_max; ++i)
        if (!ring.is_zero(A[i]))
            throw integrity_error("rankin_numerator: cancellation failed at degree " + std::to_string(i));
    A.resize(D);
    return A;
}

}  // namespace mfq

#endif
