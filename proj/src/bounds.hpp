// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef WILF_BOUNDS_HPP
#define WILF_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "invariants.hpp"
#include "rational.hpp"

namespace wilf {

enum class BoundId : int {
    Wilf1 = 0,   // d >= 1/e
    Zhai2,       // d >= 1/e - (m-1)/(f+1) * (e-2)/(2e)
    Lemma3,      // (e-1)(f+1-g) >= m-1
    TwoStar,     // 2(f+1) <= 2e(f+1-g) + (e-2)(m-1)
    ThreeStar,   // m-1 <= (e-1)(f+1-g)
    PropA,       // d >= 1/e when f+1 <= 3m, else d > (8-e)/(6e); e in {4,5}
    PropB,       // d >= 2/(e^2-e+2)
};

constexpr std::array<BoundId, 7> kAllBounds = {
    BoundId::Wilf1,   BoundId::Zhai2, BoundId::Lemma3, BoundId::TwoStar,
    BoundId::ThreeStar, BoundId::PropA, BoundId::PropB,
};

// "WILF_1", "ZHAI_2", ... (report tags).
std::string_view bound_tag(BoundId id);
// "wilf", "zhai", ... (CLI names).
std::string_view bound_cli_name(BoundId id);
std::optional<BoundId> bound_from_cli_name(std::string_view name);

enum class PropABranch : int {
    None = 0,
    ConductorLe3m, // f+1 <= 3m: d >= 1/e (non-strict)
    ConductorGt3m, // f+1 > 3m: d > (8-e)/(6e) (strict)
};

// One inequality evaluated exactly. lhs/rhs are kept in the orientation the
// inequality is stated in (ge: lhs >= rhs, otherwise lhs <= rhs); slack is
// normalized so that holds <=> slack >= 0 (> 0 for strict bounds).
struct BoundCheck {
    BoundId id;
    Rational lhs;
    Rational rhs;
    bool ge;            // stated orientation
    bool strict;
    Rational slack;     // lhs - rhs when ge, rhs - lhs otherwise
    bool holds;
    bool is_equality;   // slack == 0
    PropABranch branch = PropABranch::None;
};

BoundCheck check_wilf(const InvariantSet& inv);
BoundCheck check_zhai(const InvariantSet& inv);
BoundCheck check_lemma3(const InvariantSet& inv);
BoundCheck check_2star(const InvariantSet& inv);
BoundCheck check_3star(const InvariantSet& inv);
// Throws UnsupportedEmbeddingDim unless e is 4 or 5.
BoundCheck check_prop_a(const InvariantSet& inv);
BoundCheck check_prop_b(const InvariantSet& inv);

BoundCheck check_bound(BoundId id, const InvariantSet& inv);

// Every applicable check (PropA only when e is 4 or 5), ordered by BoundId.
std::vector<BoundCheck> check_all(const InvariantSet& inv);

} // namespace wilf

#endif
