#include <doctest.h>

#include <memory>
#include <numeric>

#include "mfq/eis.hpp"
#include "mfq/ntt.hpp"
#include "oracles.hpp"

using namespace mfq;

namespace {

struct Setup {
    FftPrime f;
    Fp64 ring;
    CoprimeTable table;
    Setup(u64 n, std::vector<u32> orders, u32 bits = 30)
        : f(find_fft_prime(n + 1, orders, bits)), ring(f.q), table(rough_coprime_sieve(n + 2)) {}
    EmbeddedCharacter<Fp64> embed(u32 N, u32 a) {
        chis.push_back(std::make_unique<DirichletCharacter>(conrey_character(N, a)));
        return embed_values(ring, *chis.back(), f.zeta_for_order(chis.back()->order));
    }
    std::vector<std::unique_ptr<DirichletCharacter>> chis;
};

}  // namespace

TEST_CASE("divisor-count and divisor-power-sum series") {
    Setup s(64, {1});
    auto one = s.embed(1, 1);
    auto c = eisenstein_coeffs(s.ring, 1, one, one, 64, s.table, false);
    for (u64 m = 1; m <= 64; ++m) CHECK(c.a[m] == oracle::divisor_count(m));
    std::vector<u64> first{1, 2, 2, 3, 2, 4};
    for (u64 m = 1; m <= 6; ++m) CHECK(c.a[m] == first[m - 1]);
    auto c4 = eisenstein_coeffs(s.ring, 4, one, one, 64, s.table, false);
    CHECK(c4.a[2] == 9);
    CHECK(c4.a[6] == 252);
    for (u64 m = 1; m <= 64; ++m) CHECK(c4.a[m] == s.ring.from_mpz(oracle::divisor_power_sum(m, 3)));
}

TEST_CASE("weight-1 series for the quadratic character mod 23") {
    Setup s(64, {2});
    auto one = s.embed(1, 1);
    auto psi = s.embed(23, 22);
    auto c = eisenstein_coeffs(s.ring, 1, one, psi, 64, s.table, true);
    CHECK(c.a[1] == 1);
    CHECK(c.a[2] == 2);
    CHECK(c.a[3] == 2);
    CHECK(c.a[4] == 3);
    CHECK(c.a[6] == 4);
    CHECK(c.a[8] == 4);
    CHECK(c.a[9] == 3);
    CHECK(c.a[0] == s.ring.from_mpq(mpq_class(3, 2)));
}

TEST_CASE("fast path equals the naive divisor sums across weights and characters") {
    const u64 n = 500;
    Setup s(n, {22, 8, 4, 6, 2}, 30);
    std::vector<std::pair<u32, u32>> pairs{{1, 1},  {4, 3},  {5, 2},  {5, 4},  {8, 3},
                                           {11, 10}, {12, 5}, {23, 5}, {35, 6}, {35, 8}};
    auto one = s.embed(1, 1);
    for (auto [N, a] : pairs) {
        auto chi = conrey_character(N, a);
        if ((s.f.q - 1) % chi.order) continue;
        auto psi = s.embed(N, a);
        for (u32 k = 1; k <= 4; ++k) {
            auto fast = eisenstein_coeffs(s.ring, k, one, psi, n, s.table, false);
            auto slow = eisenstein_coeffs_naive(s.ring, k, one, psi, n, false);
            CHECK(fast.a == slow.a);
            // and with the characters swapped
            auto fast2 = eisenstein_coeffs(s.ring, k, psi, one, n, s.table, false);
            auto slow2 = eisenstein_coeffs_naive(s.ring, k, psi, one, n, false);
            CHECK(fast2.a == slow2.a);
        }
    }
    // one bigger run
    auto psi23 = s.embed(23, 22);
    Setup big(10000, {2}, 30);
    auto bone = big.embed(1, 1);
    auto bpsi = big.embed(23, 22);
    auto fb = eisenstein_coeffs(big.ring, 1, bone, bpsi, 10000, big.table, false);
    auto sb = eisenstein_coeffs_naive(big.ring, 1, bone, bpsi, 10000, false);
    CHECK(fb.a == sb.a);
    (void)psi23;
}

TEST_CASE("two characters both nontrivial") {
    const u64 n = 300;
    Setup s(n, {4, 2}, 30);
    auto phi = s.embed(5, 3);
    auto psi = s.embed(4, 3);
    for (u32 k = 1; k <= 3; ++k) {
        auto fast = eisenstein_coeffs(s.ring, k, phi, psi, n, s.table, false);
        auto slow = eisenstein_coeffs_naive(s.ring, k, phi, psi, n, false);
        CHECK(fast.a == slow.a);
    }
}

TEST_CASE("exact cyclotomic ring agrees with the F_q reduction") {
    const u64 n = 50;
    CycQ cyc(22);
    auto phi = conrey_character(1, 1);
    auto psi = conrey_character(23, 5);
    auto ephi = embed_values(cyc, phi, cyc.one());
    auto epsi = embed_values(cyc, psi, cyc.zeta_power(1));
    CoprimeTable table = rough_coprime_sieve(n + 2);
    auto exact = eisenstein_coeffs(cyc, 1, ephi, epsi, n, table, false);
    auto naive = eisenstein_coeffs_naive(cyc, 1, ephi, epsi, n, false);
    for (u64 m = 0; m <= n; ++m) CHECK(cyc.eq(exact.a[m], naive.a[m]));

    Setup s(n, {22}, 30);
    auto fphi = s.embed(1, 1);
    auto fpsi = s.embed(23, 5);
    auto modq = eisenstein_coeffs(s.ring, 1, fphi, fpsi, n, s.table, false);
    u64 z = s.f.zeta_for_order(22);
    for (u64 m = 1; m <= n; ++m) {
        u64 acc = 0, zp = 1;
        for (const auto& c : exact.a[m]) {
            acc = (acc + mulmod_u64(s.ring.from_mpq(c), zp, s.f.q)) % s.f.q;
            zp = mulmod_u64(zp, z, s.f.q);
        }
        CHECK(acc == modq.a[m]);
    }
}

TEST_CASE("multiplicativity of coefficients at coprime pairs") {
    const u64 n = 20000;
    Setup s(n, {2}, 40);
    auto one = s.embed(1, 1);
    auto psi = s.embed(23, 22);
    auto c = eisenstein_coeffs(s.ring, 2, one, psi, n, s.table, false);
    oracle::Rng rng(31);
    int done = 0;
    while (done < 300) {
        u64 u = 2 + rng.next() % 100, v = 2 + rng.next() % (n / 200);
        if (std::gcd(u, v) != 1 || u * v > n) continue;
        CHECK(c.a[u * v] == s.ring.mul(c.a[u], c.a[v]));
        ++done;
    }
}

TEST_CASE("operation counts stay under the stated budgets") {
    for (u64 n : {1000ull, 10000ull, 100000ull}) {
        Setup s(n, {2}, 40);
        auto one = s.embed(1, 1);
        auto psi = s.embed(23, 22);
        const u64 o_phi = 1, o_psi = 2;
        // weight 2: under n + o_phi + o_psi multiplications, under n additions
        s.ring.ops.reset();
        auto c2 = eisenstein_coeffs(s.ring, 2, one, psi, n, s.table, true);
        CHECK(s.ring.ops.muls < n + o_phi + o_psi);
        CHECK(s.ring.ops.adds < n);
        // weight 1: strictly under n multiplications
        s.ring.ops.reset();
        auto c1 = eisenstein_coeffs(s.ring, 1, one, psi, n, s.table, true);
        CHECK(s.ring.ops.muls < n);
        CHECK(s.ring.ops.adds < n);
        CHECK(c1.a[1] == 1);
        CHECK(c2.a[1] == 1);
    }
}

TEST_CASE("length-1 edge") {
    Setup s(4, {1});
    auto one = s.embed(1, 1);
    auto c = eisenstein_coeffs(s.ring, 3, one, one, 1, s.table, false);
    CHECK(c.a.size() == 2);
    CHECK(c.a[1] == 1);
    auto cn = eisenstein_coeffs_naive(s.ring, 3, one, one, 1, false);
    CHECK(cn.a[1] == 1);
}
