#include "mfq/cyclotomic.hpp"

#include <sstream>

namespace mfq {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<mpz_class> poly_divexact(const std::vector<mpz_class>& num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    std::vector<mpz_class> quo(num.size() - den.size() + 1, mpz_class(0));
    for (std::size_t i = quo.size(); i-- > 0;) {
        mpz_class c = rem[i + den.size() - 1] / den.back();
        quo[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw integrity_error("cyclotomic_polynomial: inexact division");
    return quo;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(u32 o) {
    // Phi_o = (x^o - 1) / prod_{d | o, d < o} Phi_d
    std::vector<mpz_class> num(o + 1, mpz_class(0));
    num[0] = -1;
    num[o] = 1;
    for (u32 d = 1; d < o; ++d) {
        if (o % d) continue;
        std::vector<mpz_class> phid = cyclotomic_polynomial(d);
        num = poly_divexact(num, phid);
    }
    return num;
}

CycQ::CycQ(u32 order) : o_(order) {
    if (order == 0) throw std::invalid_argument("CycQ: order must be positive");
    auto phi = cyclotomic_polynomial(order);
    phi_.reserve(phi.size());
    for (const auto& c : phi) phi_.emplace_back(c);
    // power table with monic reduction
    zeta_pow_.resize(o_);
    std::size_t d = degree();
    Elem cur = one();
    for (u32 t = 0; t < o_; ++t) {
        zeta_pow_[t] = cur;
        // multiply by zeta
        Elem nxt(d, mpq_class(0));
        mpq_class lead = cur[d - 1];
        for (std::size_t i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (lead != 0)
            for (std::size_t i = 0; i < d; ++i) {
                nxt[i] -= lead * phi_[i];
                nxt[i].canonicalize();
            }
        cur = std::move(nxt);
    }
}

CycQ::Elem CycQ::zeta_power(u64 t) const { return zeta_pow_[t % o_]; }

bool CycQ::eq(const Elem& a, const Elem& b) const {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

CycQ::Elem CycQ::add(const Elem& a, const Elem& b) const {
    ++ops.adds;
    Elem r = a;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] += b[i];
        r[i].canonicalize();
    }
    return r;
}

CycQ::Elem CycQ::sub(const Elem& a, const Elem& b) const {
    ++ops.adds;
    Elem r = a;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] -= b[i];
        r[i].canonicalize();
    }
    return r;
}

CycQ::Elem CycQ::neg(const Elem& a) const {
    Elem r = a;
    for (auto& c : r) c = -c;
    return r;
}

CycQ::Elem CycQ::mul(const Elem& a, const Elem& b) const {
    ++ops.muls;
    std::size_t d = degree();
    std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    // reduce modulo monic phi_
    for (std::size_t t = prod.size(); t-- > d;) {
        mpq_class c = prod[t];
        if (c == 0) continue;
        prod[t] = 0;
        for (std::size_t j = 0; j < d; ++j) {
            prod[t - d + j] -= c * phi_[j];
            prod[t - d + j].canonicalize();
        }
    }
    Elem r(prod.begin(), prod.begin() + d);
    for (auto& c : r) c.canonicalize();
    return r;
}

std::optional<CycQ::Elem> CycQ::inv(const Elem& a) const {
    if (is_zero(a)) return std::nullopt;
    // extended euclid in Q[x] between phi_ and a; Phi_o is irreducible so the
    // gcd is a nonzero constant and s1 gives the inverse.
    using Poly = std::vector<mpq_class>;
    auto deg_of = [](const Poly& p) -> long {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1;
    };
    auto submul = [](Poly& dst, const mpq_class& c, const Poly& src, long shift) {
        if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, mpq_class(0));
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[i + shift] -= c * src[i];
            dst[i + shift].canonicalize();
        }
    };
    Poly r0 = phi_, r1(a.begin(), a.end());
    Poly s0(1, mpq_class(0)), s1(1, mpq_class(1));
    while (deg_of(r1) > 0) {
        long d0 = deg_of(r0), d1 = deg_of(r1);
        while (d0 >= d1) {
            mpq_class c = r0[d0] / r1[d1];
            c.canonicalize();
            submul(r0, c, r1, d0 - d1);
            submul(s0, c, s1, d0 - d1);
            d0 = deg_of(r0);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    long d1 = deg_of(r1);
    if (d1 != 0) return std::nullopt;
    mpq_class lead = r1[0];
    Elem out = zero();
    for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) {
        out[i] = s1[i] / lead;
        out[i].canonicalize();
    }
    return out;
}

std::string CycQ::to_string(const Elem& a) const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i].get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace mfq
