#ifndef MFQ_TEST_ORACLES_HPP
#define MFQ_TEST_ORACLES_HPP

// Independent test oracles. Everything here recomputes expected values by a
// route disjoint from the library code under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mfq/rings.hpp"

namespace oracle {

using mfq::i64;
using mfq::u32;
using mfq::u64;

// deterministic splitmix64 stream
struct Rng {
    u64 s;
    explicit Rng(u64 seed) : s(seed) {}
    u64 next() {
        u64 z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    i64 int_in(i64 lo, i64 hi) { return lo + static_cast<i64>(next() % static_cast<u64>(hi - lo + 1)); }
};

inline std::map<u64, u32> factorize(u64 n) {
    std::map<u64, u32> f;
    for (u64 d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++f[d];
            n /= d;
        }
    if (n > 1) ++f[n];
    return f;
}

inline int liouville(u64 n) {
    u32 omega = 0;
    for (auto& [p, e] : factorize(n)) omega += e;
    return omega % 2 ? -1 : 1;
}

inline u64 divisor_count(u64 n) {
    u64 d = 1;
    for (auto& [p, e] : factorize(n)) d *= (e + 1);
    return d;
}

inline mpz_class divisor_power_sum(u64 n, u32 k) {
    mpz_class s = 0;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0) {
            mpz_class dp = 1;
            for (u32 i = 0; i < k; ++i) dp *= static_cast<long>(d);
            s += dp;
        }
    return s;
}

// coefficients a_1..a_n of q prod (1-q^m)^2 (1-q^{11m})^2, built by convolving
// with the sparse pentagonal-number series prod (1-x^m) = sum (-1)^k x^{k(3k-1)/2}
// four times; every intermediate is a true (small) partial-product coefficient
inline std::vector<i64> eta_product_level11(u64 n) {
    auto pentagonal = [](u64 limit, u64 stretch) {
        std::vector<std::pair<u64, int>> terms{{0, 1}};
        for (i64 k = 1;; ++k) {
            u64 e1 = stretch * (u64)(k * (3 * k - 1) / 2);
            u64 e2 = stretch * (u64)(k * (3 * k + 1) / 2);
            int s = (k % 2) ? -1 : 1;
            if (e1 <= limit) terms.emplace_back(e1, s);
            if (e2 <= limit) terms.emplace_back(e2, s);
            if (e1 > limit && e2 > limit) break;
        }
        std::sort(terms.begin(), terms.end());
        return terms;
    };
    std::vector<i64> c(n, 0);
    c[0] = 1;
    for (int pass = 0; pass < 4; ++pass) {
        u64 stretch = pass < 2 ? 1 : 11;
        auto terms = pentagonal(n - 1, stretch);
        std::vector<i64> out(n, 0);
        for (u64 i = 0; i < n; ++i) {
            if (c[i] == 0) continue;
            for (auto [e, s] : terms) {
                if (i + e >= n) break;  // terms ascend in e
                out[i + e] += s * c[i];
            }
        }
        c = std::move(out);
    }
    std::vector<i64> a(n + 1, 0);
    for (u64 m = 1; m <= n; ++m) a[m] = c[m - 1];
    return a;
}

// #E(F_p) point count for the curve y^2 + y = x^3 - x^2 - 10x - 20 (11a1);
// a_p = p + 1 - #E. Substituting y -> (y-1)/2 needs p odd: count via the
// completed square form (2y+1)^2 = 4x^3 - 4x^2 - 40x - 79.
inline i64 curve11a_ap(u64 p) {
    auto powm = [&](u64 b, u64 e) {
        u64 r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = static_cast<u64>((mfq::u128)r * b % p);
            b = static_cast<u64>((mfq::u128)b * b % p);
            e >>= 1;
        }
        return r;
    };
    i64 count = 1;  // point at infinity
    for (u64 x = 0; x < p; ++x) {
        // rhs = 4x^3 - 4x^2 - 40x - 79 mod p; solutions in y are 1 + chi(rhs)
        u64 x2 = static_cast<u64>((mfq::u128)x * x % p);
        u64 x3 = static_cast<u64>((mfq::u128)x2 * x % p);
        u64 rhs = (4 * (mfq::u128)x3 + 4 * (mfq::u128)(p - 1) * x2 % p + 40 * (mfq::u128)(p - 1) * x % p +
                   (mfq::u128)(p - 79 % p)) %
                  p;
        if (rhs == 0) {
            count += 1;
            continue;
        }
        u64 chi = powm(rhs, (p - 1) / 2);
        count += (chi == 1) ? 2 : 0;
    }
    return static_cast<i64>(p) + 1 - count;
}

// ---- exact tensor oracle via the resultant Res_U(P(U), U^e Q(T/U)) ----
// P, Q given by sigma lists (P = 1 - s1 T + s2 T^2 - ...). Degenerate top
// sigmas are trimmed so the true degrees are used. Returns plain coefficients
// of prod_{i,j} (1 - alpha_i beta_j T), computed by evaluation of numeric
// resultants (Sylvester determinants over Q) and Lagrange interpolation.
std::vector<mpq_class> tensor_resultant(const std::vector<mpq_class>& sigP,
                                        const std::vector<mpq_class>& sigQ);

// determinant of a square rational matrix (fraction-full Gaussian elimination)
inline mpq_class rational_det(std::vector<std::vector<mpq_class>> M) {
    mpq_class det = 1;
    const std::size_t n = M.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && M[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        mpq_class inv = 1 / M[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (M[r][c] == 0) continue;
            mpq_class f = M[r][c] * inv;
            for (std::size_t cc = c; cc < n; ++cc) M[r][cc] -= f * M[c][cc];
        }
    }
    det.canonicalize();
    return det;
}

inline std::vector<mpq_class> tensor_resultant(const std::vector<mpq_class>& sigP_in,
                                               const std::vector<mpq_class>& sigQ_in) {
    auto to_coeffs = [](const std::vector<mpq_class>& sig) {
        std::vector<mpq_class> c{mpq_class(1)};
        for (std::size_t i = 0; i < sig.size(); ++i) c.push_back((i % 2 == 0) ? mpq_class(-sig[i]) : sig[i]);
        while (c.size() > 1 && c.back() == 0) c.pop_back();  // true degree
        return c;
    };
    std::vector<mpq_class> P = to_coeffs(sigP_in), Q = to_coeffs(sigQ_in);
    const std::size_t dp = P.size() - 1, dq = Q.size() - 1;
    if (dp == 0 || dq == 0) return {mpq_class(1)};
    const std::size_t D = dp * dq;
    // evaluate R(t) = Res_U(P(U), sum_j Q_j t^j U^{dq-j}) at D+1 points
    std::vector<mpq_class> ts, rs;
    for (std::size_t pt = 0; pt <= D; ++pt) {
        mpq_class t(static_cast<long>(pt) + 1);
        // B(U) = sum_{j=0..dq} Q_j t^j U^{dq-j}
        std::vector<mpq_class> B(dq + 1);
        mpq_class tp = 1;
        for (std::size_t j = 0; j <= dq; ++j) {
            B[dq - j] = Q[j] * tp;
            tp *= t;
        }
        // Sylvester matrix of P (degree dp) and B (degree dq), size dp+dq
        std::size_t n = dp + dq;
        std::vector<std::vector<mpq_class>> S(n, std::vector<mpq_class>(n, mpq_class(0)));
        for (std::size_t r = 0; r < dq; ++r)
            for (std::size_t j = 0; j <= dp; ++j) S[r][r + j] = P[dp - j];
        for (std::size_t r = 0; r < dp; ++r)
            for (std::size_t j = 0; j <= dq; ++j) S[dq + r][r + j] = B[dq - j];
        ts.push_back(t);
        rs.push_back(rational_det(std::move(S)));
    }
    // Lagrange interpolation to degree D
    std::vector<mpq_class> R(D + 1, mpq_class(0));
    for (std::size_t i = 0; i <= D; ++i) {
        std::vector<mpq_class> basis{mpq_class(1)};
        mpq_class denom = 1;
        for (std::size_t j = 0; j <= D; ++j) {
            if (j == i) continue;
            std::vector<mpq_class> nb(basis.size() + 1, mpq_class(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                nb[k] -= basis[k] * ts[j];
                nb[k + 1] += basis[k];
            }
            basis = std::move(nb);
            denom *= (ts[i] - ts[j]);
        }
        mpq_class f = rs[i] / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) R[k] += basis[k] * f;
    }
    // normalize so R(0) = 1
    mpq_class r0 = R[0];
    if (r0 == 0) throw std::runtime_error("tensor_resultant: vanishing constant term");
    for (auto& c : R) {
        c /= r0;
        c.canonicalize();
    }
    return R;
}

// symmetric power by explicit expansion over rational roots: multisets of
// size k from the root list
inline std::vector<mpq_class> sympow_from_roots(const std::vector<mpq_class>& roots, u32 k) {
    std::vector<mpq_class> poly{mpq_class(1)};
    std::vector<u32> idx(k, 0);
    // enumerate non-decreasing index tuples
    auto advance = [&]() {
        int i = static_cast<int>(k) - 1;
        while (i >= 0) {
            if (++idx[i] < roots.size()) {
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[i];
                return true;
            }
            --i;
        }
        return false;
    };
    if (roots.empty() || k == 0) return poly;
    do {
        mpq_class m = 1;
        for (u32 t : std::vector<u32>(idx.begin(), idx.end())) m *= roots[t];
        // multiply poly by (1 - m T)
        std::vector<mpq_class> np(poly.size() + 1, mpq_class(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            np[i] += poly[i];
            np[i + 1] -= poly[i] * m;
        }
        poly = std::move(np);
    } while (advance());
    for (auto& c : poly) c.canonicalize();
    return poly;
}

}  // namespace oracle

#endif
