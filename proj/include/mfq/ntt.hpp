#ifndef MFQ_NTT_HPP
#define MFQ_NTT_HPP

#include <cstdint>
#include <vector>

#include "mfq/errors.hpp"
#include "mfq/rings.hpp"

namespace mfq {

// FFT prime q = m * 2^r * lcm(orders) + 1 with 2^(r-1) >= n, so products of
// series with up to n terms fit in one size-2^r transform, and every required
// character order divides q - 1.
struct FftPrime {
    u64 q = 0;
    u32 r2adic = 0;                // s with 2^s || q - 1
    u64 primitive_root = 0;
    std::vector<u32> extra_orders;

    u64 zeta_for_order(u32 o) const;  // g^((q-1)/o); incompatible_prime_error if o does not divide q-1
};

bool is_prime_u64(u64 n);
u64 mulmod_u64(u64 a, u64 b, u64 q);
u64 powmod_u64(u64 a, u64 e, u64 q);

// Smallest prime of the stated shape with q >= max(2^min_bits, lower_bound).
// Deterministic for fixed inputs. capacity_error if none exists below 2^63.
FftPrime find_fft_prime(u64 n, const std::vector<u32>& required_orders, u32 min_bits, u64 lower_bound = 0);

// Wrap an explicitly chosen prime: validates primality, transform capacity
// for length-n products and divisibility by the required orders, and finds a
// primitive root. incompatible_prime_error / capacity_error on failure.
FftPrime fft_prime_from(u64 q, u64 n, const std::vector<u32>& required_orders);

// Radix-2 number-theoretic transform with precomputed Shoup twiddle pairs.
// Tables are immutable after construction; multiply() uses per-call scratch.
class Ntt {
  public:
    Ntt(const FftPrime& f, u32 max_log2);

    u64 modulus() const { return q_; }
    u32 max_log2() const { return maxlog_; }

    // in-place forward transform, a.size() = power of two <= 2^max_log2
    void transform(std::vector<u64>& a) const;

    // first n coefficients of the series product a*b (inputs truncated to n)
    std::vector<u64> multiply(const std::vector<u64>& a, const std::vector<u64>& b, std::size_t n) const;

  private:
    u64 q_;
    u32 maxlog_;
    std::vector<u64> rt_, rt_sh_;  // twiddles in bit-reversed block order + Shoup companions
};

// Series product guard used by the pipeline: checks both operands run over the
// transform's modulus.
std::vector<u64> series_mul(const Fp64& ring, const Ntt& ntt, const std::vector<u64>& a,
                            const std::vector<u64>& b, std::size_t n);

}  // namespace mfq

#endif
