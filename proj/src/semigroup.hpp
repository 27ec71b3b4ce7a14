// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef WILF_SEMIGROUP_HPP
#define WILF_SEMIGROUP_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bitmap.hpp"

namespace wilf {

// A numerical semigroup: an additively closed subset S of the nonnegative
// integers with 0 in S and finite complement. Canonically represented by a
// membership bitmap over [0, conductor + multiplicity) plus the cached
// minimal generating set (the atoms).
//
// Values are immutable after construction and safe to share across threads.
class NumericalSemigroup {
  public:
    // Smallest semigroup containing the generators. Redundant generators are
    // dropped. Throws GcdNotOne if gcd(gens) > 1, InvalidArgument on empty or
    // nonpositive input, Overflow if the closure window exceeds the cap.
    static NumericalSemigroup from_generators(std::span<const std::int64_t> gens);

    // The semigroup whose gap set is exactly `gaps`. Throws InvalidGapSetError
    // (with the lexicographically first violating pair) when the complement
    // is not additively closed; InvalidArgument on nonpositive entries.
    static NumericalSemigroup from_gaps(std::span<const std::int64_t> gaps);

    static NumericalSemigroup naturals() { return from_generators(std::array{std::int64_t{1}}); }

    bool contains(std::int64_t n) const {
        if (n < 0) return false;
        if (n >= conductor_) return true;
        return membership_.test(static_cast<std::size_t>(n));
    }

    // Smallest c with [c, inf) contained in S; 0 iff S = N.
    std::int64_t conductor() const { return conductor_; }
    // Smallest positive element.
    std::int64_t multiplicity() const { return multiplicity_; }
    // Largest gap; only meaningful when S != N (then conductor >= 2).
    std::int64_t frobenius() const { return conductor_ - 1; }
    bool is_naturals() const { return conductor_ == 0; }

    // Minimal generating set E = S* \ (S* + S*), sorted ascending.
    const std::vector<std::int64_t>& atoms() const { return atoms_; }

    // Number of gaps.
    std::int64_t genus() const {
        return conductor_ - static_cast<std::int64_t>(
                                membership_.count_below(static_cast<std::size_t>(conductor_)));
    }

    std::vector<std::int64_t> gaps() const;

    const Bitmap& membership() const { return membership_; }

    // Child in the semigroup tree: S \ {a} for an effective generator a
    // (an atom strictly greater than the Frobenius number). Atoms and
    // conductor are recomputed incrementally, no full re-closure.
    NumericalSemigroup remove_effective_generator(std::int64_t a) const;

    // Canonical textual form, e.g. "<3,5,7>".
    std::string to_string() const;

    bool operator==(const NumericalSemigroup& o) const {
        return conductor_ == o.conductor_ && multiplicity_ == o.multiplicity_ &&
               membership_ == o.membership_;
    }

  private:
    NumericalSemigroup() = default;

    // Recompute atoms_ from membership_ (marks E + S* in a sums bitmap; the
    // unmarked members of S* in the window are the atoms).
    void compute_atoms();
    void check_invariants() const;

    std::int64_t conductor_ = 0;
    std::int64_t multiplicity_ = 1;
    Bitmap membership_;                // window [0, conductor + multiplicity)
    std::vector<std::int64_t> atoms_;
};

} // namespace wilf

#endif
