#ifndef MFQ_CYCLOTOMIC_HPP
#define MFQ_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "mfq/errors.hpp"
#include "mfq/rings.hpp"

// Exact arithmetic in Q(zeta_o) = Q[x] / Phi_o(x), elements stored on the
// power basis 1, zeta, ..., zeta^(deg-1) with mpq coordinates. Used for exact
// generalized Bernoulli numbers and Eisenstein constant terms; the modular
// pipeline never touches this (character values stay exponents there).

namespace mfq {

// Coefficients of the o-th cyclotomic polynomial (monic, integer).
std::vector<mpz_class> cyclotomic_polynomial(u32 o);

class CycQ {
  public:
    using Elem = std::vector<mpq_class>;  // length deg(Phi_o)

    explicit CycQ(u32 order);

    u32 order() const { return o_; }
    std::size_t degree() const { return phi_.size() - 1; }

    Elem zero() const { return Elem(degree(), mpq_class(0)); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }
    Elem zeta_power(u64 t) const;  // image of zeta^t

    bool is_zero(const Elem& a) const {
        for (const auto& c : a)
            if (c != 0) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;

    Elem from_int(long v) const {
        Elem e = zero();
        e[0] = v;
        return e;
    }
    Elem from_index(u64 v) const {
        Elem e = zero();
        mpz_class z;
        mpz_set_ui(z.get_mpz_t(), v);
        e[0] = mpq_class(z);
        return e;
    }
    Elem from_mpq(const mpq_class& v) const {
        Elem e = zero();
        e[0] = v;
        return e;
    }
    std::optional<Elem> inv(const Elem& a) const;  // via extended gcd in Q[x]
    Elem div_small(const Elem& a, u64 k) const {
        if (k == 0) throw divisibility_error(0);
        ++ops.divs;
        Elem r = a;
        mpq_class kk(from_index(k)[0]);
        for (auto& c : r) {
            c /= kk;
            c.canonicalize();
        }
        return r;
    }
    std::string to_string(const Elem& a) const;

    mutable OpCounter ops;

  private:
    u32 o_;
    std::vector<mpq_class> phi_;               // monic Phi_o as mpq for reduction
    std::vector<Elem> zeta_pow_;               // zeta^t for t < o, reduced
};

}  // namespace mfq

#endif
