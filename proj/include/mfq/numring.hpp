#ifndef MFQ_NUMRING_HPP
#define MFQ_NUMRING_HPP

#include <cstdint>
#include <vector>

#include "mfq/errors.hpp"
#include "mfq/rings.hpp"

namespace mfq {

// Z[y] / (monic integral minpoly), elements as coordinate vectors on the
// power basis 1, y, ..., y^{d-1} with mpz entries. Carries exact eigenform
// coefficients through multiplicative extension and tensor products.
class NumberRingZ {
  public:
    using Elem = std::vector<mpz_class>;

    explicit NumberRingZ(std::vector<mpz_class> minpoly) : mp_(std::move(minpoly)) {
        if (mp_.size() < 2 || mp_.back() != 1)
            throw std::invalid_argument("NumberRingZ: minpoly must be monic of degree >= 1");
    }

    std::size_t degree() const { return mp_.size() - 1; }

    Elem zero() const { return Elem(degree(), mpz_class(0)); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }
    Elem gen() const {  // the class of y (equals 0 when degree = 1 and minpoly = y)
        Elem e = zero();
        if (degree() >= 2)
            e[1] = 1;
        else
            e[0] = -mp_[0];
        return e;
    }
    bool is_zero(const Elem& a) const {
        for (const auto& c : a)
            if (c != 0) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_rational(const Elem& a) const {
        for (std::size_t i = 1; i < a.size(); ++i)
            if (a[i] != 0) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        ++ops.adds;
        Elem r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        ++ops.adds;
        Elem r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& c : r) c = -c;
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        ++ops.muls;
        const std::size_t d = degree();
        std::vector<mpz_class> prod(2 * d - 1, mpz_class(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (b[j] == 0) continue;
                prod[i + j] += a[i] * b[j];
            }
        }
        for (std::size_t t = prod.size(); t-- > d;) {
            if (prod[t] == 0) continue;
            mpz_class c = prod[t];
            prod[t] = 0;
            for (std::size_t j = 0; j < d; ++j) prod[t - d + j] -= c * mp_[j];
        }
        prod.resize(d);
        return prod;
    }

    Elem from_int(long v) const {
        Elem e = zero();
        e[0] = v;
        return e;
    }
    Elem from_index(u64 v) const {
        Elem e = zero();
        mpz_set_ui(e[0].get_mpz_t(), v);
        return e;
    }
    std::optional<Elem> inv(const Elem& a) const {
        if (eq(a, one())) return a;
        Elem m = neg(one());
        if (eq(a, m)) return a;
        return std::nullopt;
    }
    Elem div_small(const Elem& a, u64 k) const {
        ++ops.divs;
        Elem r = a;
        mpz_class kk;
        mpz_set_ui(kk.get_mpz_t(), k);
        for (auto& c : r) {
            mpz_class q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), kk.get_mpz_t());
            if (rem != 0) throw divisibility_error(k);
            c = q;
        }
        return r;
    }
    std::string to_string(const Elem& a) const {
        std::string s = "(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) s += ",";
            s += a[i].get_str();
        }
        return s + ")";
    }

    const std::vector<mpz_class>& minpoly() const { return mp_; }

    mutable OpCounter ops;

  private:
    std::vector<mpz_class> mp_;  // c_0..c_d, monic
};

}  // namespace mfq

#endif
