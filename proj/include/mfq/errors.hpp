#ifndef MFQ_ERRORS_HPP
#define MFQ_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mfq {

// Base for all computation errors raised by this library (CLI maps these to
// exit code 3, capacity_error to 4, std::invalid_argument to 2).
struct computation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A division 1/k was requested in a ring where k is not invertible.
struct divisibility_error : computation_error {
    explicit divisibility_error(std::uint64_t k)
        : computation_error("ring element not divisible by " + std::to_string(k)), offending(k) {}
    std::uint64_t offending;
};

// Requested size exceeds a hard limit (transform capacity, prime search range, ...).
struct capacity_error : computation_error {
    using computation_error::computation_error;
};

// A character order does not divide q-1 for the selected prime.
struct incompatible_prime_error : computation_error {
    using computation_error::computation_error;
};

// Numerical bound could not be certified (ill-conditioned basis, lift bound violated).
struct precision_error : computation_error {
    using computation_error::computation_error;
};

// Internal cross-check failed: corrupt input data or an arithmetic bug.
struct integrity_error : computation_error {
    using computation_error::computation_error;
};

}  // namespace mfq

#endif
