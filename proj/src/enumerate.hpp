// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef WILF_ENUMERATE_HPP
#define WILF_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bounds.hpp"
#include "invariants.hpp"
#include "semigroup.hpp"

namespace wilf {

using BoundMask = std::uint32_t;

constexpr BoundMask bound_bit(BoundId id) {
    return BoundMask{1} << static_cast<int>(id);
}
constexpr BoundMask kAllBoundsMask = (BoundMask{1} << kAllBounds.size()) - 1;

// "all" or a comma-separated list of CLI bound names ("wilf,zhai,...").
// Throws InvalidArgument on unknown names.
BoundMask parse_bounds(std::string_view spec);

// Depth-first walk of the semigroup tree: the root is N, and the children of
// S are S \ {a} for every effective generator a (minimal generator above the
// Frobenius number), in ascending order. Visits every numerical semigroup of
// genus <= genus_bound exactly once. The visitor may return false to stop
// early. Returns the number of semigroups visited.
std::uint64_t enumerate_tree(
    std::int64_t genus_bound,
    const std::function<bool(const NumericalSemigroup&, std::int64_t genus)>& visit);

inline constexpr std::int64_t kBruteForceCap = 10;

// Independent oracle: enumerates all genus-element gap subsets of
// {1, ..., 2*genus-1} and keeps those whose complement is additively closed.
// Result sorted by canonical atom list. Throws CapExceeded above the cap.
std::vector<NumericalSemigroup> enumerate_bruteforce(std::int64_t genus,
                                                     std::int64_t cap = kBruteForceCap);

struct PerBoundStats {
    BoundId id = BoundId::Wilf1;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::uint64_t equalities = 0;
    std::optional<Rational> min_slack;
    std::vector<std::int64_t> argmin_atoms;
    std::int64_t argmin_genus = 0;

    void absorb(const BoundCheck& check, const std::vector<std::int64_t>& atoms,
                std::int64_t genus);
    void merge(const PerBoundStats& other);
};

struct CoverStats {
    std::uint64_t built = 0;
    std::uint64_t witness_failures = 0;
    std::uint64_t holds = 0;
    std::uint64_t violations = 0;

    void merge(const CoverStats& o);
};

struct Counterexample {
    std::vector<std::int64_t> atoms;
    std::int64_t genus = 0;
    std::string what; // bound tag or "WITNESS_COVER"
};

struct ScanReport {
    std::int64_t genus_bound = 0;
    BoundMask bounds = 0;
    std::vector<std::uint64_t> counts_per_genus; // index 0..genus_bound
    std::uint64_t semigroups_visited = 0;        // includes N at the root
    std::uint64_t semigroups_checked = 0;        // genus >= 1
    std::vector<PerBoundStats> per_bound;        // selected bounds, BoundId order
    CoverStats cover;
    std::vector<Counterexample> counterexamples;
    bool halted_early = false;
    std::uint64_t wall_time_ms = 0;
    std::vector<std::string> csv_rows; // only with ScanOptions::collect_rows

    // Associative, commutative on all statistical fields.
    void merge(const ScanReport& other);
};

struct ScanOptions {
    std::int64_t genus_bound = 1;
    BoundMask bounds = kAllBoundsMask;
    int threads = 0;     // <= 0: hardware concurrency
    int split_depth = 8; // subtrees rooted at this genus form the work queue
    bool check_cover = true;
    bool halt_on_violation = true;
    bool collect_rows = false;   // deterministic per-semigroup CSV rows
    bool debug_validate = false; // cross-check children against from_generators
};

// Checks every semigroup with 1 <= genus <= genus_bound against the selected
// bounds and the Lemma's witness cover. The report is identical for any
// thread count (wall_time_ms aside).
ScanReport scan(const ScanOptions& options);

// Header row matching ScanOptions::collect_rows output.
std::string scan_csv_header(BoundMask bounds);

// One verify-style CSV row for a single semigroup; recomputes the checks.
std::string scan_csv_row(const InvariantSet& inv, BoundMask bounds);

struct ExtremalEntry {
    InvariantSet inv;
    std::int64_t genus = 0;
    Rational slack;
    bool is_equality = false;
};

// The top_k smallest-slack semigroups for one bound, slack ascending with
// ties broken by canonical atom-list order.
std::vector<ExtremalEntry> extremal(std::int64_t genus_bound, BoundId metric,
                                    std::size_t top_k, int threads = 0);

} // namespace wilf

#endif
