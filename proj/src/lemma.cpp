// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lemma.hpp"

#include "bitmap.hpp"
#include "errors.hpp"

namespace wilf {

WitnessCover build_witness_cover(const NumericalSemigroup& s) {
    if (s.is_naturals())
        throw Error(ErrorCode::IsFullSemigroup, "S = N has no Frobenius number");

    const std::int64_t f = s.frobenius();
    const std::int64_t m = s.multiplicity();
    const auto& atoms = s.atoms();

    WitnessCover cover;
    cover.window_first = f + 1;
    cover.window_last = f + m;
    cover.source_atoms = atoms;

    // X holds exactly one multiple of m (m consecutive integers).
    std::int64_t multiples = 0;
    for (std::int64_t x = f + 1; x <= f + m; ++x) {
        if (x % m == 0) {
            ++multiples;
            continue;
        }
        bool found = false;
        for (std::size_t i = 1; i < atoms.size(); ++i) {
            const std::int64_t l = x - atoms[i];
            if (l >= 0 && l <= f && s.contains(l)) {
                cover.assignments.push_back({x, atoms[i], l});
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorCode::WitnessNotFound,
                        "no witness for " + std::to_string(x) + " in " + s.to_string());
    }
    if (multiples != 1)
        throw Error(ErrorCode::Internal, "window X must contain exactly one multiple of m");

    // Y = union of (a_i + L) for i >= 2, materialized exhaustively. Elements
    // may exceed f+m; the value range is bounded by a_e + f.
    const std::int64_t f1 = f + 1;
    Bitmap sporadics(static_cast<std::size_t>(f1));
    for (std::int64_t n = 0; n <= f; ++n)
        if (s.contains(n)) sporadics.set(static_cast<std::size_t>(n));

    Bitmap y(static_cast<std::size_t>(atoms.back() + f1));
    for (std::size_t i = 1; i < atoms.size(); ++i)
        Bitmap::or_shifted(y, sporadics, static_cast<std::size_t>(atoms[i]));

    cover.cover_size = static_cast<std::int64_t>(y.count());
    cover.cover_set.reserve(static_cast<std::size_t>(cover.cover_size));
    for (std::size_t n = y.next_set(0); n < y.size(); n = y.next_set(n + 1))
        cover.cover_set.push_back(static_cast<std::int64_t>(n));
    return cover;
}

LemmaVerification verify_lemma_bound(const WitnessCover& cover, const InvariantSet& inv) {
    if (cover.source_atoms != inv.atoms ||
        cover.window_first != inv.frobenius + 1 ||
        cover.window_last != inv.frobenius + inv.multiplicity)
        throw Error(ErrorCode::MismatchedInputs,
                    "witness cover and invariants derive from different semigroups");

    LemmaVerification v;
    v.cover_size = cover.cover_size;
    v.lower_holds = inv.multiplicity - 1 <= cover.cover_size;
    v.upper_holds =
        cover.cover_size <= checked_mul(inv.embedding_dim - 1, inv.sporadic_count);
    v.eq3 = check_lemma3(inv);
    v.eq3.holds = v.lower_holds && v.upper_holds;
    return v;
}

} // namespace wilf
