#ifndef MFQ_RINGS_HPP
#define MFQ_RINGS_HPP

#include <cstdint>
#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "mfq/errors.hpp"

namespace mfq {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Ring operation counters. Rings bump these so the operation-count theorems
// can be asserted as runtime properties. Divisions by small scalars are
// tracked separately from multiplications.
struct OpCounter {
    u64 adds = 0;
    u64 muls = 0;
    u64 divs = 0;
    void reset() { adds = muls = divs = 0; }
};

// Temporarily stop counting (constant-term setup, test scaffolding).
class CountPause {
  public:
    explicit CountPause(OpCounter& c) : c_(c), saved_(c) {}
    ~CountPause() { c_ = saved_; }
    CountPause(const CountPause&) = delete;
    CountPause& operator=(const CountPause&) = delete;

  private:
    OpCounter& c_;
    OpCounter saved_;
};

// ---------------------------------------------------------------------------
// Fp64: prime field with q < 2^63, elements as uint64_t.
// Generic products reduce through a 128-bit intermediate; the NTT uses
// Shoup multiplication with precomputed companions instead (see ntt.hpp).
// ---------------------------------------------------------------------------
class Fp64 {
  public:
    using Elem = u64;

    explicit Fp64(u64 q) : q_(q) {
        if (q < 3 || (q >> 63) != 0) throw std::invalid_argument("Fp64: modulus out of range");
    }

    u64 modulus() const { return q_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        ++ops.adds;
        u64 s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Elem sub(Elem a, Elem b) const {
        ++ops.adds;
        return a >= b ? a - b : a + q_ - b;
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
    Elem mul(Elem a, Elem b) const {
        ++ops.muls;
        return static_cast<u64>((u128)a * b % q_);
    }

    Elem from_int(long v) const {
        long r = v % static_cast<long>(q_);
        return r < 0 ? static_cast<u64>(r + static_cast<long>(q_)) : static_cast<u64>(r);
    }
    Elem from_index(u64 v) const { return v % q_; }
    Elem from_mpz(const mpz_class& v) const {
        // non-negative remainder of floor division; unsigned long is 64-bit here
        return mpz_fdiv_ui(v.get_mpz_t(), q_);
    }
    Elem from_mpq(const mpq_class& v) const {
        Elem num = from_mpz(mpz_class(v.get_num()));
        Elem den = from_mpz(mpz_class(v.get_den()));
        auto di = inv(den);
        if (!di) throw divisibility_error(static_cast<u64>(den));
        ++ops.muls;
        return static_cast<u64>((u128)num * *di % q_);
    }

    // Uncounted powering on indices (modular reduction at each squaring).
    Elem pow_index(u64 base, u64 e) const {
        u64 r = 1, x = base % q_;
        while (e) {
            if (e & 1) r = static_cast<u64>((u128)r * x % q_);
            x = static_cast<u64>((u128)x * x % q_);
            e >>= 1;
        }
        return r;
    }

    std::optional<Elem> inv(Elem a) const {
        if (a == 0) return std::nullopt;
        return pow_index(a, q_ - 2);  // q is prime
    }

    // Exact division by a small scalar; in a prime field this is a*inv(k).
    Elem div_small(Elem a, u64 k) const {
        auto ki = inv(k % q_);
        if (!ki) throw divisibility_error(k);
        ++ops.divs;
        return static_cast<u64>((u128)a * *ki % q_);
    }

    std::string to_string(Elem a) const { return to_string_u64(a); }

    // Balanced representative in (-q/2, q/2].
    i64 lift_balanced(Elem a) const {
        return a > q_ / 2 ? static_cast<i64>(a) - static_cast<i64>(q_) : static_cast<i64>(a);
    }

    mutable OpCounter ops;

  private:
    static std::string to_string_u64(u64 v) {
        char buf[24];
        std::snprintf(buf, sizeof buf, "%llu", (unsigned long long)v);
        return buf;
    }
    u64 q_;
};

// ---------------------------------------------------------------------------
// ZZ: arbitrary-precision integers. Divisions must be exact.
// ---------------------------------------------------------------------------
class ZZ {
  public:
    using Elem = mpz_class;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { ++ops.adds; return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { ++ops.adds; return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { ++ops.muls; return a * b; }

    Elem from_int(long v) const { return mpz_class(v); }
    Elem from_index(u64 v) const {
        mpz_class r;
        mpz_set_ui(r.get_mpz_t(), v);
        return r;
    }
    std::optional<Elem> inv(const Elem& a) const {
        if (a == 1 || a == -1) return a;
        return std::nullopt;
    }
    Elem div_small(const Elem& a, u64 k) const {
        ++ops.divs;
        mpz_class q, r, kk;
        mpz_set_ui(kk.get_mpz_t(), k);
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), kk.get_mpz_t());
        if (r != 0) throw divisibility_error(k);
        return q;
    }
    std::string to_string(const Elem& a) const { return a.get_str(); }

    mutable OpCounter ops;
};

// ---------------------------------------------------------------------------
// QQ: arbitrary-precision rationals.
// ---------------------------------------------------------------------------
class QQ {
  public:
    using Elem = mpq_class;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { ++ops.adds; Elem r = a + b; r.canonicalize(); return r; }
    Elem sub(const Elem& a, const Elem& b) const { ++ops.adds; Elem r = a - b; r.canonicalize(); return r; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { ++ops.muls; Elem r = a * b; r.canonicalize(); return r; }

    Elem from_int(long v) const { return mpq_class(v); }
    Elem from_index(u64 v) const {
        mpz_class z;
        mpz_set_ui(z.get_mpz_t(), v);
        return mpq_class(z);
    }
    std::optional<Elem> inv(const Elem& a) const {
        if (a == 0) return std::nullopt;
        Elem r = 1 / a;
        r.canonicalize();
        return r;
    }
    Elem div_small(const Elem& a, u64 k) const {
        if (k == 0) throw divisibility_error(0);
        ++ops.divs;
        Elem r = a / from_index(k);
        r.canonicalize();
        return r;
    }
    std::string to_string(const Elem& a) const { return a.get_str(); }

    mutable OpCounter ops;
};

// Parse "p/q" or "p" into an exact rational.
inline mpq_class parse_rational(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    v.canonicalize();
    return v;
}

}  // namespace mfq

#endif
