// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "invariants.hpp"

#include <cassert>

#include "errors.hpp"

namespace wilf {

namespace {

void require_proper(const NumericalSemigroup& s) {
    if (s.is_naturals())
        throw Error(ErrorCode::IsFullSemigroup, "S = N has no Frobenius number");
}

} // namespace

InvariantSet invariants_of(const NumericalSemigroup& s) {
    require_proper(s);
    InvariantSet inv;
    inv.frobenius = s.frobenius();
    inv.genus = s.genus();
    inv.multiplicity = s.multiplicity();
    inv.atoms = s.atoms();
    inv.embedding_dim = static_cast<std::int64_t>(inv.atoms.size());
    inv.sporadic_count = inv.frobenius + 1 - inv.genus;
    inv.wilf_density = Rational::of(inv.sporadic_count, inv.frobenius + 1);

    assert(inv.sporadic_count >= 1);
    assert(inv.embedding_dim >= 2);
    assert(inv.embedding_dim <= inv.multiplicity);
    return inv;
}

std::vector<std::int64_t> sporadic_elements(const NumericalSemigroup& s) {
    require_proper(s);
    std::vector<std::int64_t> out;
    const std::int64_t f = s.frobenius();
    for (std::int64_t n = 0; n <= f; ++n)
        if (s.contains(n)) out.push_back(n);
    if (static_cast<std::int64_t>(out.size()) != f + 1 - s.genus())
        throw Error(ErrorCode::Internal, "|L| != f+1-g for " + s.to_string());
    return out;
}

std::int64_t wilf_number(const NumericalSemigroup& s) {
    require_proper(s);
    const std::int64_t c = s.conductor();
    const std::int64_t e = static_cast<std::int64_t>(s.atoms().size());
    return checked_mul(e, c - s.genus()) - c;
}

} // namespace wilf
