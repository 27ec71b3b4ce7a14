// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef WILF_RATIONAL_HPP
#define WILF_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace wilf {

// Exact rational with 64-bit numerator/denominator, always reduced, den > 0.
// Intermediate products use 128-bit arithmetic; narrowing back to 64 bits is
// checked and raises Overflow instead of wrapping.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by intent

    static Rational of(std::int64_t num, std::int64_t den) {
        if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
        return Rational(static_cast<__int128>(num), static_cast<__int128>(den));
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(wide(num_) * o.den_ + wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(wide(num_) * o.den_ - wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(wide(num_) * o.num_, wide(den_) * o.den_);
    }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_; // canonical form
    }
    std::strong_ordering operator<=>(const Rational& o) const {
        __int128 l = wide(num_) * o.den_;
        __int128 r = wide(o.num_) * den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    static __int128 wide(std::int64_t v) { return static_cast<__int128>(v); }

    Rational(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            throw_overflow("rational reduction");
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace wilf

#endif
