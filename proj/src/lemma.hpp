// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef WILF_LEMMA_HPP
#define WILF_LEMMA_HPP

#include <cstdint>
#include <vector>

#include "bounds.hpp"
#include "invariants.hpp"
#include "semigroup.hpp"

namespace wilf {

// One covering witness: x = atom + sporadic with atom != m.
struct WitnessAssignment {
    std::int64_t x;
    std::int64_t atom;      // a_i, i >= 2
    std::int64_t sporadic;  // l in L with x = a_i + l
};

// Constructive realization of the Lemma's covering argument for the window
// X = {f+1, ..., f+m}: every x in X that is not a multiple of m is written as
// atom + sporadic, and Y = union over atoms a_i (i >= 2) of (a_i + L).
struct WitnessCover {
    std::int64_t window_first; // f + 1
    std::int64_t window_last;  // f + m
    std::vector<WitnessAssignment> assignments; // one per x in X with m not dividing x
    std::vector<std::int64_t> cover_set;        // Y, sorted ascending
    std::int64_t cover_size;                    // |Y|
    std::vector<std::int64_t> source_atoms;     // atoms of the semigroup covered
};

// Builds the cover with a deterministic tie-break (smallest qualifying atom).
// Throws WitnessNotFound if some x has no witness - that would contradict the
// Lemma and signals an implementation bug, never an expected outcome.
// Throws IsFullSemigroup for S = N.
WitnessCover build_witness_cover(const NumericalSemigroup& s);

// Checks the chain m-1 <= |Y| <= (e-1)(f+1-g); holds requires both sides.
// The summary BoundCheck carries Eq. (3) ((e-1)(f+1-g) >= m-1), which the
// chain implies. Throws MismatchedInputs when cover and inv come from
// different semigroups.
struct LemmaVerification {
    BoundCheck eq3;          // id Lemma3; holds = lower_holds && upper_holds
    bool lower_holds;        // m-1 <= |Y|
    bool upper_holds;        // |Y| <= (e-1)(f+1-g)
    std::int64_t cover_size;
};

LemmaVerification verify_lemma_bound(const WitnessCover& cover, const InvariantSet& inv);

} // namespace wilf

#endif
