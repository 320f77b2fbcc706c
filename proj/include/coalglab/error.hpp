#ifndef COALGLAB_ERROR_HPP
#define COALGLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace coalglab {

struct coalg_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_mismatch : coalg_error {
    using coalg_error::coalg_error;
};

struct field_mismatch : coalg_error {
    using coalg_error::coalg_error;
};

// Raised by the Dickson radical when char(k) = p with p <= dim(A); callers
// fall back to brute-force ideal enumeration over GF(p).
struct small_characteristic : coalg_error {
    using coalg_error::coalg_error;
};

struct budget_exceeded : coalg_error {
    using coalg_error::coalg_error;
};

// Rational factorization refuses inputs above the configured degree cap.
struct degree_cap_exceeded : coalg_error {
    using coalg_error::coalg_error;
};

// Two independent computations of the same object disagreed. Always a bug
// or an invalid input; never swallowed.
struct method_disagreement : coalg_error {
    using coalg_error::coalg_error;
};

struct invalid_structure : coalg_error {
    using coalg_error::coalg_error;
};

} // namespace coalglab

#endif
