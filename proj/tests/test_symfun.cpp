#include <doctest.h>

#include "mfq/symfun.hpp"
#include "oracles.hpp"

using namespace mfq;

namespace {

QQ qq;

FactorRepr<QQ> sig(std::vector<long> v) {
    std::vector<mpq_class> e;
    for (long c : v) e.emplace_back(c);
    return make_sigma(qq, static_cast<int>(v.size()), std::move(e));
}

std::vector<mpq_class> plain_coeffs(const FactorRepr<QQ>& P) {
    // 1, -s1, s2, ... as plain polynomial coefficients
    std::vector<mpq_class> c{mpq_class(1)};
    for (std::size_t i = 0; i < P.values.size(); ++i)
        c.push_back((i % 2 == 0) ? mpq_class(-P.values[i]) : P.values[i]);
    return c;
}

FactorRepr<QQ> random_factor(oracle::Rng& rng, int deg, long lim = 9) {
    std::vector<mpq_class> v;
    for (int i = 0; i < deg; ++i) v.emplace_back(rng.int_in(-lim, lim));
    if (v.back() == 0) v.back() = 1;  // keep the declared degree honest
    return make_sigma(qq, deg, std::move(v));
}

}  // namespace

TEST_CASE("newton_from_poly examples") {
    // single root: N_k = a^k
    auto N = newton_from_poly(qq, sig({5}), 3);
    CHECK(N.values == std::vector<mpq_class>{5, 25, 125});
    // generic degree 2: N1 = s1, N2 = s1^2 - 2 s2
    auto N2 = newton_from_poly(qq, sig({3, 7}), 2);
    CHECK(N2.values[0] == 3);
    CHECK(N2.values[1] == 9 - 14);
    // (1-2T)(1-3T): power sums 2^k + 3^k
    auto N3 = newton_from_poly(qq, sig({5, 6}), 3);
    CHECK(N3.values == std::vector<mpq_class>{5, 13, 35});
}

TEST_CASE("poly_from_newton examples") {
    FactorRepr<QQ> N{ReprKind::newton, 1, {mpq_class(4), mpq_class(16), mpq_class(64)}};
    auto P = poly_from_newton(qq, N, 3, -1);
    CHECK(P.values == std::vector<mpq_class>{4, 0, 0});
    FactorRepr<QQ> N2{ReprKind::newton, 2, {mpq_class(5), mpq_class(13)}};
    auto P2 = poly_from_newton(qq, N2, 2, -1);
    CHECK(P2.values == std::vector<mpq_class>{5, 6});
    // h_2 = (N_1^2 + N_2)/2
    oracle::Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        mpq_class n1(rng.int_in(-9, 9)), n2(rng.int_in(-9, 9));
        FactorRepr<QQ> Nr{ReprKind::newton, 2, {n1, n2}};
        auto H = poly_from_newton(qq, Nr, 2, +1);
        CHECK(H.values[1] == (n1 * n1 + n2) / 2);
    }
}

TEST_CASE("complete_from_poly examples") {
    // P = 1 - aT + bT^2: h = (a, a^2-b, a^3-2ab)
    oracle::Rng rng(4);
    for (int t = 0; t < 10; ++t) {
        mpq_class a(rng.int_in(-9, 9)), b(rng.int_in(-9, 9));
        FactorRepr<QQ> P{ReprKind::sigma, 2, {a, b}};
        auto h = complete_from_poly(qq, P, 3);
        CHECK(h.values[0] == a);
        CHECK(h.values[1] == a * a - b);
        CHECK(h.values[2] == a * a * a - 2 * a * b);
    }
    // geometric series
    auto g = complete_from_poly(qq, sig({1}), 4);
    CHECK(g.values == std::vector<mpq_class>{1, 1, 1, 1});
    // sums over i+j=e of 2^i 3^j
    auto s = complete_from_poly(qq, sig({5, 6}), 3);
    CHECK(s.values == std::vector<mpq_class>{5, 19, 65});
}

TEST_CASE("h_from_partitions matches the closed displays and complete_from_poly") {
    oracle::Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        int d = 1 + static_cast<int>(rng.next() % 4);
        auto P = random_factor(rng, d);
        auto N = newton_from_poly(qq, P, 8);
        auto h = complete_from_poly(qq, P, 8);
        CHECK(h_from_partitions(qq, N, 1) == N.values[0]);
        auto n1 = N.values[0], n2 = N.values[1], n3 = N.values[2], n4 = N.values[3];
        CHECK(h_from_partitions(qq, N, 3) == (n1 * n1 * n1 + 3 * n1 * n2 + 2 * n3) / 6);
        CHECK(h_from_partitions(qq, N, 4) ==
              (n1 * n1 * n1 * n1 + 6 * n1 * n1 * n2 + 8 * n1 * n3 + 3 * n2 * n2 + 6 * n4) / 24);
        for (std::size_t k = 1; k <= 8; ++k) CHECK(h_from_partitions(qq, N, k) == h.values[k - 1]);
    }
}

TEST_CASE("round trips: poly -> newton -> poly") {
    oracle::Rng rng(6);
    for (int t = 0; t < 30; ++t) {
        int d = 1 + static_cast<int>(rng.next() % 5);
        auto P = random_factor(rng, d);
        auto N = newton_from_poly(qq, P, d);
        auto back = poly_from_newton(qq, N, d, -1);
        CHECK(back.values == P.values);
    }
    // same over a prime field
    Fp64 fp((u64(1) << 32) + 15);
    oracle::Rng rng2(7);
    for (int t = 0; t < 30; ++t) {
        int d = 1 + static_cast<int>(rng2.next() % 5);
        std::vector<u64> v;
        for (int i = 0; i < d; ++i) v.push_back(fp.from_int(rng2.int_in(-20, 20)));
        if (v.back() == 0) v.back() = 1;
        auto P = make_sigma(fp, d, std::move(v));
        auto N = newton_from_poly(fp, P, d);
        auto back = poly_from_newton(fp, N, d, -1);
        CHECK(back.values == P.values);
    }
}

TEST_CASE("complete sums equal the coefficients of 1/P") {
    oracle::Rng rng(8);
    for (int t = 0; t < 12; ++t) {
        int d = 1 + static_cast<int>(rng.next() % 4);
        auto P = random_factor(rng, d);
        auto h = complete_from_poly(qq, P, 8);
        // series inverse of the plain coefficients
        auto c = plain_coeffs(P);
        std::vector<mpq_class> inv(9, 0);
        inv[0] = 1;
        for (std::size_t i = 1; i <= 8; ++i) {
            mpq_class acc = 0;
            for (std::size_t j = 1; j <= std::min(i, c.size() - 1); ++j) acc += c[j] * inv[i - j];
            inv[i] = -acc;
        }
        for (std::size_t i = 1; i <= 8; ++i) CHECK(h.values[i - 1] == inv[i]);
    }
}

TEST_CASE("tensor product: trivial shapes") {
    auto t1 = tensor_product(qq, {sig({2}), sig({3})}, 1);
    CHECK(t1.values[0] == 6);  // (1-2T) (x) (1-3T) = 1-6T
    auto t2 = tensor_product(qq, {sig({5, 6}), sig({1})}, 2);
    CHECK(t2.values == std::vector<mpq_class>{5, 6});  // identity factor
}

TEST_CASE("tensor product against the resultant oracle, degrees <= 3") {
    oracle::Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        int dp = 1 + static_cast<int>(rng.next() % 3);
        int dq = 1 + static_cast<int>(rng.next() % 3);
        auto P = random_factor(rng, dp), Q = random_factor(rng, dq);
        std::size_t D = static_cast<std::size_t>(dp) * dq;
        auto T = tensor_product(qq, {P, Q}, D);
        auto R = oracle::tensor_resultant(P.values, Q.values);
        for (std::size_t i = 1; i <= D; ++i) {
            mpq_class want = i < R.size() ? R[i] : mpq_class(0);
            mpq_class got = sigma_at(qq, T, i);
            if (i % 2 == 1) got = -got;
            CHECK(got == want);
        }
    }
}

TEST_CASE("root power") {
    auto r1 = root_power(qq, sig({7}), 3, 1);
    CHECK(r1.values[0] == 343);
    auto r2 = root_power(qq, sig({5, 6}), 2, 2);
    CHECK(r2.values == std::vector<mpq_class>{13, 36});  // roots 4 and 9
    auto r3 = root_power(qq, sig({5, 6}), 1, 2);
    CHECK(r3.values == std::vector<mpq_class>{5, 6});
}

TEST_CASE("sym_power examples and the rational-root oracle") {
    // Sym^1 = identity
    auto s1 = sym_power(qq, sig({4, 7}), 1, 2);
    CHECK(s1.values == std::vector<mpq_class>{4, 7});
    // degree 2, k = 2 closed form
    oracle::Rng rng(10);
    for (int t = 0; t < 10; ++t) {
        mpq_class a(rng.int_in(-9, 9)), b(rng.int_in(1, 9));
        FactorRepr<QQ> P{ReprKind::sigma, 2, {a, b}};
        auto s = sym_power(qq, P, 2, 3);
        CHECK(s.values[0] == a * a - b);
        CHECK(s.values[1] == a * a * b - b * b);
        CHECK(s.values[2] == b * b * b);
    }
    // d = 1: Sym^k (1-aT) = 1-a^k T
    auto sd1 = sym_power(qq, sig({3}), 5, 1);
    CHECK(sd1.values[0] == 243);
    // random rational roots vs multiset expansion, d <= 3, k <= 4
    for (int t = 0; t < 40; ++t) {
        int d = 1 + static_cast<int>(rng.next() % 3);
        u32 k = 1 + static_cast<u32>(rng.next() % 4);
        std::vector<mpq_class> roots;
        std::vector<mpq_class> poly{mpq_class(1)};
        for (int i = 0; i < d; ++i) {
            mpq_class r(rng.int_in(-6, 6), 1 + static_cast<unsigned long>(rng.next() % 3));
            r.canonicalize();
            if (r == 0) r = 1;
            roots.push_back(r);
            std::vector<mpq_class> np(poly.size() + 1, mpq_class(0));
            for (std::size_t j = 0; j < poly.size(); ++j) {
                np[j] += poly[j];
                np[j + 1] -= poly[j] * r;
            }
            poly = std::move(np);
        }
        std::vector<mpq_class> sigv;
        for (std::size_t i = 1; i < poly.size(); ++i)
            sigv.push_back((i % 2 == 1) ? mpq_class(-poly[i]) : poly[i]);
        FactorRepr<QQ> P{ReprKind::sigma, d, sigv};
        auto expect = oracle::sympow_from_roots(roots, k);
        std::size_t l = expect.size() - 1;
        auto got = sym_power(qq, P, k, l);
        for (std::size_t i = 1; i <= l; ++i) {
            mpq_class g = sigma_at(qq, got, i);
            if (i % 2 == 1) g = -g;
            CHECK(g == expect[i]);
        }
    }
}

TEST_CASE("direct sum") {
    auto d1 = direct_sum(qq, sig({1}), sig({1}), 2);
    CHECK(d1.values == std::vector<mpq_class>{2, 1});  // (1-T)^2
    auto d2 = direct_sum(qq, sig({3, 4}), make_sigma(qq, 0, {}), 2);
    CHECK(d2.values == std::vector<mpq_class>{3, 4});  // P (+) 1 = P
    // Newton sums add componentwise
    oracle::Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        auto P = random_factor(rng, 2), Q = random_factor(rng, 2);
        auto S = direct_sum(qq, P, Q, 4);
        auto NS = newton_from_poly(qq, S, 6);
        auto NP = newton_from_poly(qq, P, 6), NQ = newton_from_poly(qq, Q, 6);
        for (int k = 0; k < 6; ++k) CHECK(NS.values[k] == NP.values[k] + NQ.values[k]);
    }
}

TEST_CASE("artin formalism at the factor level: (P+Q) tensor R") {
    oracle::Rng rng(12);
    for (int t = 0; t < 15; ++t) {
        auto P = random_factor(rng, 2), Q = random_factor(rng, 2), R = random_factor(rng, 2);
        std::size_t l = 6;
        auto left = tensor_product(qq, {direct_sum(qq, P, Q, 4), R}, l);
        auto right = direct_sum(qq, tensor_product(qq, {P, R}, l), tensor_product(qq, {Q, R}, l), l);
        for (std::size_t i = 1; i <= l; ++i) CHECK(sigma_at(qq, left, i) == sigma_at(qq, right, i));
    }
}

TEST_CASE("rankin numerator closed forms") {
    oracle::Rng rng(13);
    // two degree-2 factors: A = 1 - s2(P) s2(Q) T^2
    for (int t = 0; t < 50; ++t) {
        auto P = random_factor(rng, 2), Q = random_factor(rng, 2);
        auto A = rankin_numerator(qq, {P, Q}, 12);
        REQUIRE(A.size() == 4);
        CHECK(A[0] == 1);
        CHECK(A[1] == 0);
        CHECK(A[2] == -P.values[1] * Q.values[1]);
        CHECK(A[3] == 0);
    }
    // two degree-3 factors: 1 - A2 T^2 + A3 T^3 - A4 T^4 + A6 T^6 with
    // A2 = a2 b2, A3 = (a1 a2 - a3) b3 + (b1 b2 - b3) a3, A4 = a1 a3 b1 b3,
    // A6 = (a3 b3)^2 (the printed display's "b1 b3" inside A3 is a misprint;
    // the symmetric form is what the generating identity yields)
    for (int t = 0; t < 50; ++t) {
        auto P = random_factor(rng, 3), Q = random_factor(rng, 3);
        mpq_class a1 = P.values[0], a2 = P.values[1], a3 = P.values[2];
        mpq_class b1 = Q.values[0], b2 = Q.values[1], b3 = Q.values[2];
        auto A = rankin_numerator(qq, {P, Q}, 20);
        REQUIRE(A.size() == 9);
        CHECK(A[0] == 1);
        CHECK(A[1] == 0);
        CHECK(A[2] == -(a2 * b2));
        CHECK(A[3] == (a1 * a2 - a3) * b3 + (b1 * b2 - b3) * a3);
        CHECK(A[4] == -(a1 * a3 * b1 * b3));
        CHECK(A[5] == 0);
        CHECK(A[6] == a3 * b3 * a3 * b3);
        CHECK(A[7] == 0);
        CHECK(A[8] == 0);
    }
    // three degree-2 factors: 1 - BC T^2 + 2AB T^3 - B^2 C T^4 + B^3 T^6
    for (int t = 0; t < 50; ++t) {
        auto P = random_factor(rng, 2), Q = random_factor(rng, 2), R = random_factor(rng, 2);
        if (P.values[1] == 0 || Q.values[1] == 0 || R.values[1] == 0) continue;
        mpq_class A_ = P.values[0] * Q.values[0] * R.values[0];
        mpq_class B_ = P.values[1] * Q.values[1] * R.values[1];
        auto h2 = [](const FactorRepr<QQ>& F) -> mpq_class { return F.values[0] * F.values[0] - F.values[1]; };
        mpq_class C_ = h2(P) / P.values[1] + h2(Q) / Q.values[1] + h2(R) / R.values[1];
        auto A = rankin_numerator(qq, {P, Q, R}, 24);
        REQUIRE(A.size() == 8);
        CHECK(A[0] == 1);
        CHECK(A[1] == 0);
        CHECK(A[2] == -(B_ * C_));
        CHECK(A[3] == 2 * A_ * B_);
        CHECK(A[4] == -(B_ * B_ * C_));
        CHECK(A[5] == 0);
        CHECK(A[6] == B_ * B_ * B_);
        CHECK(A[7] == 0);
    }
}

TEST_CASE("rankin numerator times the tensor factor reproduces the h products") {
    oracle::Rng rng(14);
    for (int t = 0; t < 10; ++t) {
        auto P = random_factor(rng, 2), Q = random_factor(rng, 3);
        const std::size_t l = 14;
        auto A = rankin_numerator(qq, {P, Q}, l);
        auto hP = complete_from_poly(qq, P, l), hQ = complete_from_poly(qq, Q, l);
        auto T = tensor_product(qq, {P, Q}, 6);
        // series division: hseq = A / tensor
        std::vector<mpq_class> tp{1};
        for (std::size_t i = 1; i <= 6; ++i)
            tp.push_back((i % 2 == 1) ? mpq_class(-sigma_at(qq, T, i)) : sigma_at(qq, T, i));
        std::vector<mpq_class> h(l + 1, 0);
        for (std::size_t i = 0; i <= l; ++i) {
            mpq_class acc = i < A.size() ? A[i] : mpq_class(0);
            for (std::size_t j = 1; j <= std::min(i, tp.size() - 1); ++j) acc -= tp[j] * h[i - j];
            h[i] = acc;
        }
        for (std::size_t i = 1; i <= l; ++i) CHECK(h[i] == hP.values[i - 1] * hQ.values[i - 1]);
    }
}

TEST_CASE("divisibility errors carry the offending scalar") {
    ZZ zz;
    FactorRepr<ZZ> N{ReprKind::newton, 2, {mpz_class(3), mpz_class(4)}};
    // 2 h_2 = N_1 h_1 + N_2 = 13, not divisible
    try {
        poly_from_newton(zz, N, 2, +1);
        FAIL("expected divisibility_error");
    } catch (const divisibility_error& e) {
        CHECK(e.offending == 2);
    }
}
