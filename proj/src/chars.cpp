#include "mfq/chars.hpp"

#include <numeric>

namespace mfq {

namespace {

struct Component {
    u32 pe;                 // prime power
    u64 den;                // exponent denominator
    std::vector<i64> expo;  // exponent numerator per residue mod pe (-1 for non-units)
};

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u32 primitive_root_mod_pe(u32 p, u32 e) {
    // smallest primitive root mod p, lifted so it generates mod p^e
    u32 pm1 = p - 1;
    std::vector<u32> fac;
    u32 m = pm1;
    for (u32 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            fac.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) fac.push_back(m);
    u32 g = 2;
    auto powm = [](u64 b, u64 ex, u64 mod) {
        u64 r = 1;
        b %= mod;
        while (ex) {
            if (ex & 1) r = r * b % mod;
            b = b * b % mod;
            ex >>= 1;
        }
        return r;
    };
    for (;; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (u32 q : fac)
            if (powm(g, pm1 / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) break;
    }
    if (e >= 2 && powm(g, pm1, (u64)p * p) == 1) g += p;
    return g;
}

Component odd_component(u32 p, u32 e, u32 a) {
    u32 pe = 1;
    for (u32 i = 0; i < e; ++i) pe *= p;
    u32 phi = pe / p * (p - 1);
    u32 g = primitive_root_mod_pe(p, e);
    std::vector<i64> lg(pe, -1);
    u64 x = 1;
    for (u32 t = 0; t < phi; ++t) {
        lg[x] = t;
        x = x * g % pe;
    }
    i64 la = lg[a % pe];
    Component c{pe, phi, std::vector<i64>(pe, -1)};
    for (u32 r = 0; r < pe; ++r)
        if (lg[r] >= 0) c.expo[r] = static_cast<i64>((u64)la * lg[r] % phi);
    return c;
}

Component two_component(u32 e, u32 a) {
    u32 pe = 1u << e;
    if (e == 1) return Component{2, 1, {-1, 0}};
    if (e == 2) {
        // chi_4(3,.) is the odd character
        i64 sa = (a % 4 == 3) ? 1 : 0;
        Component c{4, 2, {-1, 0, -1, 0}};
        c.expo[3] = sa % 2;
        return c;
    }
    // r = (-1)^s 5^t, s in {0,1}, t in [0, 2^{e-2})
    u32 half = pe >> 2;  // order of <5>
    std::vector<i64> s_of(pe, -1), t_of(pe, -1);
    u64 x = 1;
    for (u32 t = 0; t < half; ++t) {
        s_of[x] = 0;
        t_of[x] = t;
        s_of[pe - x] = 1;
        t_of[pe - x] = t;
        x = x * 5 % pe;
    }
    i64 sa = s_of[a % pe], ta = t_of[a % pe];
    u64 den = 2ull * half;  // 2^{e-1}
    Component c{pe, den, std::vector<i64>(pe, -1)};
    for (u32 r = 0; r < pe; ++r) {
        if (s_of[r] < 0) continue;
        // e( sa*sr/2 + ta*tr/half ) -> exponent over den
        u64 t = ((u64)sa * s_of[r] % 2) * half + ((u64)ta * t_of[r] % half) * 2;
        c.expo[r] = static_cast<i64>(t % den);
    }
    return c;
}

}  // namespace

DirichletCharacter conrey_character(u32 N, u32 a) {
    if (N == 0) throw std::invalid_argument("conrey_character: modulus must be positive");
    if (N > 1000000) throw capacity_error("conrey_character: direct log tables stop at N = 10^6");
    a %= N;
    if (N == 1) {
        DirichletCharacter chi;
        chi.modulus = 1;
        chi.conrey = 1;
        chi.order = 1;
        chi.log = {0};
        return chi;
    }
    if (std::gcd(a, N) != 1) throw std::invalid_argument("conrey_character: index not a unit");

    std::vector<Component> comps;
    u32 m = N;
    for (u32 p = 2; (u64)p * p <= m; ++p) {
        if (m % p) continue;
        u32 e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        comps.push_back(p == 2 ? two_component(e, a) : odd_component(p, e, a));
    }
    if (m > 1) comps.push_back(odd_component(m, 1, a));

    u64 M = 1;
    for (const auto& c : comps) M = M / gcd_u64(M, c.den) * c.den;

    std::vector<i64> T(N, -1);
    u64 g_all = M;
    for (u32 r = 0; r < N; ++r) {
        if (std::gcd(r, N) != 1) continue;
        u64 t = 0;
        for (const auto& c : comps) t = (t + (u64)c.expo[r % c.pe] * (M / c.den)) % M;
        T[r] = static_cast<i64>(t);
        g_all = gcd_u64(g_all, t);
    }
    u64 order = M / g_all;

    DirichletCharacter chi;
    chi.modulus = N;
    chi.conrey = a;
    chi.order = static_cast<u32>(order);
    chi.log.assign(N, -1);
    for (u32 r = 0; r < N; ++r)
        if (T[r] >= 0) chi.log[r] = static_cast<i64>((u64)T[r] / g_all % order);
    return chi;
}

u32 conrey_inverse_index(u32 N, u32 a) {
    if (N == 1) return 1;
    i64 t = 0, newt = 1, r = N, newr = a % N;
    while (newr != 0) {
        i64 q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw std::invalid_argument("conrey_inverse_index: index not a unit");
    return static_cast<u32>((t % N + N) % N);
}

mpq_class gen_bernoulli_rational(const DirichletCharacter& chi, u32 k) {
    if (chi.order > 2) throw std::invalid_argument("gen_bernoulli_rational: character order exceeds 2");
    QQ ring;
    return gen_bernoulli(ring, chi, k, [&](u64 t) { return mpq_class(t == 0 ? 1 : -1); });
}

CycQ::Elem gen_bernoulli_cyclotomic(const CycQ& ring, const DirichletCharacter& chi, u32 k) {
    if (ring.order() % chi.order) throw std::invalid_argument("gen_bernoulli_cyclotomic: order mismatch");
    u32 step = ring.order() / chi.order;
    return gen_bernoulli(ring, chi, k, [&](u64 t) { return ring.zeta_power(t * step); });
}

Fp64::Elem gen_bernoulli_modq(const Fp64& ring, const DirichletCharacter& chi, u32 k, Fp64::Elem zeta) {
    std::vector<Fp64::Elem> pw(chi.order);
    pw[0] = ring.one();
    for (u32 i = 1; i < chi.order; ++i) pw[i] = ring.mul(pw[i - 1], zeta);
    return gen_bernoulli(ring, chi, k, [&](u64 t) { return pw[t]; });
}

Fp64::Elem eis_constant_term_modq(const Fp64& ring, u32 k, const DirichletCharacter& phi,
                                  Fp64::Elem zeta_phi, const DirichletCharacter& psi, Fp64::Elem zeta_psi) {
    if (phi.modulus == 1) {
        Fp64::Elem b = gen_bernoulli_modq(ring, psi, k, zeta_psi);
        return ring.neg(ring.div_small(b, 2ull * k));  // -(1/2) B_{k,psi}/k
    }
    if (psi.modulus == 1 && k == 1) return gen_bernoulli_modq(ring, phi, 1, zeta_phi);
    return ring.zero();
}

CycQ::Elem eis_constant_term_cyclotomic(const CycQ& ring, u32 k, const DirichletCharacter& phi,
                                        const DirichletCharacter& psi) {
    if (phi.modulus == 1) {
        CycQ::Elem b = gen_bernoulli_cyclotomic(ring, psi, k);
        return ring.neg(ring.div_small(b, 2ull * k));
    }
    if (psi.modulus == 1 && k == 1) return gen_bernoulli_cyclotomic(ring, phi, 1);
    return ring.zero();
}

}  // namespace mfq
