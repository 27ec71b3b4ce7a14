// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "errors.hpp"
#include "invariants.hpp"

using namespace wilf;

namespace {

// A007323 for genus 0..12, cross-checked by the brute-force oracle below.
const std::vector<std::uint64_t> kCounts = {1,   1,   2,   4,    7,    12,  23,
                                            39,  67,  118, 204,  343,  592};

bool same_stats(const PerBoundStats& a, const PerBoundStats& b) {
    return a.id == b.id && a.checked == b.checked && a.violations == b.violations &&
           a.equalities == b.equalities && a.min_slack == b.min_slack &&
           a.argmin_atoms == b.argmin_atoms && a.argmin_genus == b.argmin_genus;
}

bool same_report(const ScanReport& a, const ScanReport& b) {
    if (a.genus_bound != b.genus_bound || a.bounds != b.bounds ||
        a.counts_per_genus != b.counts_per_genus ||
        a.semigroups_visited != b.semigroups_visited ||
        a.semigroups_checked != b.semigroups_checked ||
        a.per_bound.size() != b.per_bound.size() || a.halted_early != b.halted_early ||
        a.csv_rows != b.csv_rows || a.counterexamples.size() != b.counterexamples.size())
        return false;
    for (std::size_t i = 0; i < a.per_bound.size(); ++i)
        if (!same_stats(a.per_bound[i], b.per_bound[i]))
            return false;
    return a.cover.built == b.cover.built &&
           a.cover.witness_failures == b.cover.witness_failures &&
           a.cover.holds == b.cover.holds && a.cover.violations == b.cover.violations;
}

} // namespace

TEST_CASE("tree enumeration counts match the known sequence") {
    std::vector<std::uint64_t> counts(13, 0);
    std::uint64_t visited = enumerate_tree(12, [&](const NumericalSemigroup& s,
                                                   std::int64_t genus) {
        CHECK(genus == s.genus());
        ++counts[static_cast<std::size_t>(genus)];
        return true;
    });
    CHECK(counts == kCounts);
    std::uint64_t total = 0;
    for (auto c : kCounts)
        total += c;
    CHECK(visited == total);
}

TEST_CASE("tree root only") {
    std::uint64_t n = 0;
    CHECK(enumerate_tree(0, [&](const NumericalSemigroup& s, std::int64_t genus) {
              CHECK(genus == 0);
              CHECK(s.is_naturals());
              ++n;
              return true;
          }) == 1);
    CHECK(n == 1);
    CHECK_THROWS_AS(enumerate_tree(-1, [](const NumericalSemigroup&, std::int64_t) {
                        return true;
                    }),
                    Error);
}

TEST_CASE("visitor can stop the walk early") {
    std::uint64_t seen = 0;
    std::uint64_t count = enumerate_tree(10, [&](const NumericalSemigroup&, std::int64_t) {
        return ++seen < 5;
    });
    CHECK(seen == 5);
    CHECK(count == 5);
}

TEST_CASE("brute-force oracle equals the tree on small genus") {
    for (std::int64_t g = 0; g <= 8; ++g) {
        auto oracle = enumerate_bruteforce(g);
        CHECK(oracle.size() == kCounts[static_cast<std::size_t>(g)]);
        std::set<std::string> oracle_set;
        for (const auto& s : oracle) {
            CHECK(s.genus() == g);
            oracle_set.insert(s.to_string());
        }
        CHECK(oracle_set.size() == oracle.size()); // no duplicates

        std::set<std::string> tree_set;
        enumerate_tree(g, [&](const NumericalSemigroup& s, std::int64_t genus) {
            if (genus == g)
                tree_set.insert(s.to_string());
            return true;
        });
        CHECK(tree_set == oracle_set);
    }
}

TEST_CASE("brute-force genus 4 semigroups, canonically ordered") {
    auto list = enumerate_bruteforce(4);
    std::vector<std::string> names;
    for (const auto& s : list)
        names.push_back(s.to_string());
    CHECK(names == std::vector<std::string>{"<2,9>", "<3,5>", "<3,7,8>", "<4,5,6>",
                                            "<4,5,7>", "<4,6,7,9>", "<5,6,7,8,9>"});
}

TEST_CASE("brute-force cap") {
    CHECK_THROWS_AS(enumerate_bruteforce(11), Error);
    try {
        enumerate_bruteforce(11);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
    CHECK(enumerate_bruteforce(10, 10).size() == 204);
    CHECK_THROWS_AS(enumerate_bruteforce(-1), Error);
}

TEST_CASE("bound selection parsing") {
    CHECK(parse_bounds("all") == kAllBoundsMask);
    CHECK(parse_bounds("wilf") == bound_bit(BoundId::Wilf1));
    CHECK(parse_bounds("wilf,prop_b") ==
          (bound_bit(BoundId::Wilf1) | bound_bit(BoundId::PropB)));
    CHECK(parse_bounds("two_star,three_star,lemma3") ==
          (bound_bit(BoundId::TwoStar) | bound_bit(BoundId::ThreeStar) |
           bound_bit(BoundId::Lemma3)));
    CHECK_THROWS_AS(parse_bounds("bogus"), Error);
    CHECK_THROWS_AS(parse_bounds(""), Error);
    CHECK_THROWS_AS(parse_bounds("wilf,,zhai"), Error);
}

TEST_CASE("scan up to genus 5: every aggregate frozen") {
    ScanOptions opt;
    opt.genus_bound = 5;
    ScanReport r = scan(opt);

    CHECK(r.semigroups_visited == 27);
    CHECK(r.semigroups_checked == 26);
    CHECK(r.counts_per_genus == std::vector<std::uint64_t>{1, 1, 2, 4, 7, 12});
    CHECK(r.counterexamples.empty());
    CHECK_FALSE(r.halted_early);

    REQUIRE(r.per_bound.size() == 7);
    const std::uint64_t expected_eq[] = {12, 7, 5, 7, 5, 2, 7};
    for (std::size_t i = 0; i < 7; ++i) {
        const PerBoundStats& st = r.per_bound[i];
        CHECK(st.id == kAllBounds[i]);
        CHECK(st.violations == 0);
        CHECK(st.equalities == expected_eq[i]);
        CHECK(st.checked == (st.id == BoundId::PropA ? 9 : 26));
        REQUIRE(st.min_slack.has_value());
        CHECK(*st.min_slack == Rational(0));
        if (st.id == BoundId::PropA) {
            CHECK(st.argmin_atoms == std::vector<std::int64_t>{4, 5, 6, 7});
            CHECK(st.argmin_genus == 3);
        } else {
            CHECK(st.argmin_atoms == std::vector<std::int64_t>{2, 3});
            CHECK(st.argmin_genus == 1);
        }
    }

    CHECK(r.cover.built == 26);
    CHECK(r.cover.holds == 26);
    CHECK(r.cover.witness_failures == 0);
    CHECK(r.cover.violations == 0);
}

TEST_CASE("scan up to genus 12: equality census") {
    ScanOptions opt;
    opt.genus_bound = 12;
    ScanReport r = scan(opt);
    CHECK(r.semigroups_checked == 1412);
    const std::uint64_t expected_eq[] = {47, 24, 12, 24, 12, 6, 24};
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(r.per_bound[i].equalities == expected_eq[i]);
        CHECK(r.per_bound[i].violations == 0);
    }
    CHECK(r.per_bound[5].checked == 520); // e in {4,5} population
    CHECK(r.cover.built == 1412);
    CHECK(r.cover.holds == 1412);
}

TEST_CASE("scan validates its options") {
    ScanOptions opt;
    opt.genus_bound = 0;
    CHECK_THROWS_AS(scan(opt), Error);
    opt.genus_bound = 3;
    opt.bounds = 0;
    CHECK_THROWS_AS(scan(opt), Error);
}

TEST_CASE("scan results are identical for any worker count") {
    ScanOptions base;
    base.genus_bound = 10;
    base.collect_rows = true;
    base.threads = 1;
    ScanReport one = scan(base);
    CHECK(one.csv_rows.size() == one.semigroups_checked);

    for (int threads : {2, 4, 8}) {
        ScanOptions opt = base;
        opt.threads = threads;
        ScanReport r = scan(opt);
        CAPTURE(threads);
        CHECK(same_report(one, r));
    }
}

TEST_CASE("scan results are independent of the split depth") {
    ScanOptions base;
    base.genus_bound = 9;
    base.collect_rows = true;
    base.threads = 4;
    base.split_depth = 8;
    ScanReport expected = scan(base);
    for (int split : {0, 1, 3, 6, 9, 20}) {
        ScanOptions opt = base;
        opt.split_depth = split;
        CAPTURE(split);
        CHECK(same_report(expected, scan(opt)));
    }
}

TEST_CASE("scan with a subset of bounds") {
    ScanOptions opt;
    opt.genus_bound = 6;
    opt.bounds = parse_bounds("wilf,lemma3");
    ScanReport r = scan(opt);
    REQUIRE(r.per_bound.size() == 2);
    CHECK(r.per_bound[0].id == BoundId::Wilf1);
    CHECK(r.per_bound[1].id == BoundId::Lemma3);
    CHECK(r.per_bound[0].checked == r.semigroups_checked);
}

TEST_CASE("debug validation agrees with direct construction") {
    ScanOptions opt;
    opt.genus_bound = 8;
    opt.debug_validate = true;
    ScanReport r = scan(opt); // throws Internal on any disagreement
    CHECK(r.semigroups_checked == 155);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("halt flag does not change a clean scan") {
    ScanOptions a;
    a.genus_bound = 7;
    a.collect_rows = true;
    ScanOptions b = a;
    b.halt_on_violation = false;
    CHECK(same_report(scan(a), scan(b)));
}

TEST_CASE("report merge adds disjoint statistics") {
    // Merging a report with a fresh empty one of the same shape is identity.
    ScanOptions opt;
    opt.genus_bound = 5;
    ScanReport r = scan(opt);
    ScanReport sum = r;
    ScanReport empty = r;
    empty.counts_per_genus.assign(empty.counts_per_genus.size(), 0);
    empty.semigroups_visited = 0;
    empty.semigroups_checked = 0;
    for (auto& st : empty.per_bound)
        st = PerBoundStats{st.id, 0, 0, 0, std::nullopt, {}, 0};
    empty.cover = CoverStats{};
    sum.merge(empty);
    CHECK(same_report(sum, r));

    // Merge is symmetric on the aggregate fields.
    ScanReport ab = r;
    ab.merge(r);
    CHECK(ab.semigroups_checked == 2 * r.semigroups_checked);
    CHECK(ab.per_bound[0].equalities == 2 * r.per_bound[0].equalities);
    CHECK(ab.per_bound[0].min_slack == r.per_bound[0].min_slack);
}

TEST_CASE("mismatched reports refuse to merge") {
    ScanOptions a;
    a.genus_bound = 3;
    ScanOptions b;
    b.genus_bound = 4;
    ScanReport ra = scan(a);
    ScanReport rb = scan(b);
    CHECK_THROWS_AS(ra.merge(rb), Error);
}

TEST_CASE("csv rows follow a serial walk in depth-first order") {
    ScanOptions opt;
    opt.genus_bound = 3;
    opt.collect_rows = true;
    ScanReport r = scan(opt);
    REQUIRE(r.csv_rows.size() == 7);
    // DFS from N: <2,3>, then <3,4,5> subtree, ...
    auto s23 = NumericalSemigroup::from_generators(std::vector<std::int64_t>{2, 3});
    CHECK(r.csv_rows[0] == scan_csv_row(invariants_of(s23), kAllBoundsMask));
    auto s345 = NumericalSemigroup::from_generators(std::vector<std::int64_t>{3, 4, 5});
    CHECK(r.csv_rows[1] == scan_csv_row(invariants_of(s345), kAllBoundsMask));
}

TEST_CASE("extremal search: smallest slack first, canonical tie-break") {
    auto top = extremal(6, BoundId::Wilf1, 3);
    REQUIRE(top.size() == 3);
    CHECK(top[0].inv.atoms == std::vector<std::int64_t>{2, 3});
    CHECK(top[0].slack == Rational(0));
    CHECK(top[0].is_equality);
    CHECK(top[1].inv.atoms == std::vector<std::int64_t>{2, 5});
    CHECK(top[2].inv.atoms == std::vector<std::int64_t>{2, 7});
    for (std::size_t i = 1; i < top.size(); ++i)
        CHECK(top[i - 1].slack <= top[i].slack);
}

TEST_CASE("extremal with more slots than semigroups") {
    auto top = extremal(1, BoundId::PropB, 10);
    REQUIRE(top.size() == 1);
    CHECK(top[0].inv.atoms == std::vector<std::int64_t>{2, 3});
    CHECK(top[0].slack == Rational(0));
    CHECK(top[0].genus == 1);
}

TEST_CASE("extremal restricted to the prop_a population") {
    auto top = extremal(4, BoundId::PropA, 2);
    REQUIRE(top.size() == 2);
    CHECK(top[0].inv.atoms == std::vector<std::int64_t>{4, 5, 6, 7});
    CHECK(top[0].slack == Rational(0));
    for (const auto& e : top) {
        CHECK(e.inv.embedding_dim >= 4);
        CHECK(e.inv.embedding_dim <= 5);
    }
    CHECK_THROWS_AS(extremal(0, BoundId::Wilf1, 3), Error);
    CHECK_THROWS_AS(extremal(3, BoundId::Wilf1, 0), Error);
}
