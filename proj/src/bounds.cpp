// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "bounds.hpp"

#include "errors.hpp"

namespace wilf {

std::string_view bound_tag(BoundId id) {
    switch (id) {
        case BoundId::Wilf1: return "WILF_1";
        case BoundId::Zhai2: return "ZHAI_2";
        case BoundId::Lemma3: return "LEMMA_3";
        case BoundId::TwoStar: return "TWO_STAR";
        case BoundId::ThreeStar: return "THREE_STAR";
        case BoundId::PropA: return "PROP_A";
        case BoundId::PropB: return "PROP_B";
    }
    throw Error(ErrorCode::Internal, "bad bound id");
}

std::string_view bound_cli_name(BoundId id) {
    switch (id) {
        case BoundId::Wilf1: return "wilf";
        case BoundId::Zhai2: return "zhai";
        case BoundId::Lemma3: return "lemma3";
        case BoundId::TwoStar: return "two_star";
        case BoundId::ThreeStar: return "three_star";
        case BoundId::PropA: return "prop_a";
        case BoundId::PropB: return "prop_b";
    }
    throw Error(ErrorCode::Internal, "bad bound id");
}

std::optional<BoundId> bound_from_cli_name(std::string_view name) {
    for (BoundId id : kAllBounds)
        if (bound_cli_name(id) == name) return id;
    return std::nullopt;
}

namespace {

BoundCheck finish(BoundId id, Rational lhs, Rational rhs, bool ge, bool strict,
                  PropABranch branch = PropABranch::None) {
    BoundCheck c;
    c.id = id;
    c.lhs = lhs;
    c.rhs = rhs;
    c.ge = ge;
    c.strict = strict;
    c.slack = ge ? lhs - rhs : rhs - lhs;
    c.holds = strict ? c.slack.sign() > 0 : c.slack.sign() >= 0;
    c.is_equality = c.slack.is_zero();
    c.branch = branch;
    return c;
}

} // namespace

BoundCheck check_wilf(const InvariantSet& inv) {
    return finish(BoundId::Wilf1, inv.wilf_density, Rational::of(1, inv.embedding_dim),
                  /*ge=*/true, /*strict=*/false);
}

BoundCheck check_zhai(const InvariantSet& inv) {
    const std::int64_t e = inv.embedding_dim;
    const std::int64_t m = inv.multiplicity;
    const std::int64_t c = inv.frobenius + 1;
    Rational rhs = Rational::of(1, e) -
                   Rational::of(checked_mul(m - 1, e - 2), checked_mul(2 * e, c));
    return finish(BoundId::Zhai2, inv.wilf_density, rhs, true, false);
}

BoundCheck check_lemma3(const InvariantSet& inv) {
    Rational lhs(checked_mul(inv.embedding_dim - 1, inv.sporadic_count));
    Rational rhs(inv.multiplicity - 1);
    return finish(BoundId::Lemma3, lhs, rhs, true, false);
}

BoundCheck check_2star(const InvariantSet& inv) {
    const std::int64_t e = inv.embedding_dim;
    Rational lhs(checked_mul(2, inv.frobenius + 1));
    Rational rhs(checked_add(checked_mul(2 * e, inv.sporadic_count),
                             checked_mul(e - 2, inv.multiplicity - 1)));
    return finish(BoundId::TwoStar, lhs, rhs, /*ge=*/false, false);
}

BoundCheck check_3star(const InvariantSet& inv) {
    Rational lhs(inv.multiplicity - 1);
    Rational rhs(checked_mul(inv.embedding_dim - 1, inv.sporadic_count));
    return finish(BoundId::ThreeStar, lhs, rhs, /*ge=*/false, false);
}

BoundCheck check_prop_a(const InvariantSet& inv) {
    const std::int64_t e = inv.embedding_dim;
    if (e != 4 && e != 5)
        throw Error(ErrorCode::UnsupportedEmbeddingDim,
                    "Proposition (a) applies to e in {4,5}, got e = " + std::to_string(e));
    if (inv.frobenius + 1 <= 3 * inv.multiplicity) {
        return finish(BoundId::PropA, inv.wilf_density, Rational::of(1, e), true,
                      /*strict=*/false, PropABranch::ConductorLe3m);
    }
    return finish(BoundId::PropA, inv.wilf_density, Rational::of(8 - e, 6 * e), true,
                  /*strict=*/true, PropABranch::ConductorGt3m);
}

BoundCheck check_prop_b(const InvariantSet& inv) {
    const std::int64_t e = inv.embedding_dim;
    Rational rhs = Rational::of(2, checked_add(checked_mul(e, e - 1), 2));
    return finish(BoundId::PropB, inv.wilf_density, rhs, true, false);
}

BoundCheck check_bound(BoundId id, const InvariantSet& inv) {
    switch (id) {
        case BoundId::Wilf1: return check_wilf(inv);
        case BoundId::Zhai2: return check_zhai(inv);
        case BoundId::Lemma3: return check_lemma3(inv);
        case BoundId::TwoStar: return check_2star(inv);
        case BoundId::ThreeStar: return check_3star(inv);
        case BoundId::PropA: return check_prop_a(inv);
        case BoundId::PropB: return check_prop_b(inv);
    }
    throw Error(ErrorCode::Internal, "bad bound id");
}

std::vector<BoundCheck> check_all(const InvariantSet& inv) {
    std::vector<BoundCheck> out;
    out.reserve(kAllBounds.size());
    for (BoundId id : kAllBounds) {
        if (id == BoundId::PropA && inv.embedding_dim != 4 && inv.embedding_dim != 5)
            continue;
        out.push_back(check_bound(id, inv));
    }
    return out;
}

} // namespace wilf
