// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef WILF_INVARIANTS_HPP
#define WILF_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "rational.hpp"
#include "semigroup.hpp"

namespace wilf {

// Every numeric quantity attached to a semigroup S != N, computed exactly.
// No floating point: the Wilf density is a reduced fraction.
struct InvariantSet {
    std::int64_t frobenius;       // f, the largest gap
    std::int64_t genus;           // g, the number of gaps
    std::int64_t multiplicity;    // m, the smallest atom
    std::int64_t embedding_dim;   // e = |atoms|
    std::vector<std::int64_t> atoms;
    std::int64_t sporadic_count;  // f + 1 - g = |L|
    Rational wilf_density;        // d = (f+1-g)/(f+1), reduced
};

// Throws IsFullSemigroup when S = N (no Frobenius number).
InvariantSet invariants_of(const NumericalSemigroup& s);

// L = { s in S : s <= f }, ascending. |L| = f+1-g is asserted, not assumed.
std::vector<std::int64_t> sporadic_elements(const NumericalSemigroup& s);

// e*(f+1-g) - (f+1); nonnegative exactly when the Wilf inequality holds.
std::int64_t wilf_number(const NumericalSemigroup& s);

} // namespace wilf

#endif
