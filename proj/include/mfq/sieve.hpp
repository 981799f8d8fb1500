#ifndef MFQ_SIEVE_HPP
#define MFQ_SIEVE_HPP

#include <cstdint>
#include <vector>

#include "mfq/rings.hpp"

namespace mfq {

// Rough-coprime factorization table for indices k < n.
//
// Every integer 1 < k < n is either a prime power (primes / higher_powers)
// or appears exactly once in the decomps arrays as k = pe * m, where
// pe = p^e for p the smallest prime factor of k and every prime factor of m
// exceeds p (so gcd(pe, m) = 1 and m < k). Decomps are sorted by increasing k,
// which is what lets an Euler-product expansion fill coefficients in one pass.
struct CoprimeTable {
    u64 n = 0;                       // exclusive bound
    std::vector<u32> primes;         // ascending primes p < n
    std::vector<u32> hp_p, hp_e, hp_pe;  // higher prime powers pe = p^e < n, e >= 2, ascending pe
    std::vector<u32> dk, dpe, dm;    // decomps: k = pe * m, ascending k
    u64 unlink_count = 0;            // operational O(n) witness

    std::size_t decomp_count() const { return dk.size(); }
};

// Linked-list sieve over the odd integers; O(n) word operations.
CoprimeTable rough_coprime_sieve(u64 n);

// Baseline schedule: each composite k < n once as (k, p^e, m) with p the
// LARGEST prime factor of k, ascending in k. Reference expansion and tests only.
struct SmoothEntry {
    u32 k, pe, m;
};
std::vector<SmoothEntry> smooth_sieve_expand_order(u64 n);

// Simple ascending prime list (test oracle helper, O(n log log n)).
std::vector<u32> primes_below(u64 n);

}  // namespace mfq

#endif
