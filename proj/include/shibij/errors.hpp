#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace shibij {

/// A value violates the invariant of the type it claims to be
/// (unsorted abacus, repeated residue, non-zero level sum, broken Shi condition...).
class InvariantError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A well-formed value is outside the domain of an operation
/// (non-minimal alcove handed to the admissible-set computation, index out of range...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Refusal to start a computation whose output would exceed the configured ceiling.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A uniqueness or existence guarantee of the underlying theory failed to hold.
/// Seeing one of these means there is a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in subtraction");
    }
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return out;
}

/// Floor division, divisor > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t d) {
    std::int64_t q = a / d;
    if ((a % d) != 0 && a < 0) {
        --q;
    }
    return q;
}

/// Representative of a mod d in {0, ..., d-1}, d > 0.
inline std::int64_t mod_nonneg(std::int64_t a, std::int64_t d) {
    std::int64_t r = a % d;
    return r < 0 ? r + d : r;
}

}  // namespace detail
}  // namespace shibij
