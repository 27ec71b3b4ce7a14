// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef WILF_ERRORS_HPP
#define WILF_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wilf {

enum class ErrorCode {
    InvalidArgument,
    GcdNotOne,
    InvalidGapSet,
    Overflow,
    IsFullSemigroup,
    UnsupportedEmbeddingDim,
    CapExceeded,
    WitnessNotFound,
    MismatchedInputs,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

// Thrown by from_gaps when the complement is not additively closed; carries
// the lexicographically first violating pair (a, b not gaps, a+b a gap).
class InvalidGapSetError : public Error {
  public:
    InvalidGapSetError(std::int64_t a, std::int64_t b)
        : Error(ErrorCode::InvalidGapSet,
                "complement is not additively closed: " + std::to_string(a) + " and " +
                    std::to_string(b) + " are not gaps but " + std::to_string(a + b) +
                    " is"),
          a_(a), b_(b) {}

    std::int64_t first() const { return a_; }
    std::int64_t second() const { return b_; }

  private:
    std::int64_t a_;
    std::int64_t b_;
};

[[noreturn]] inline void throw_overflow(const std::string& what) {
    throw Error(ErrorCode::Overflow, "integer overflow in " + what);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow("addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow("multiplication");
    return r;
}

} // namespace wilf

#endif
