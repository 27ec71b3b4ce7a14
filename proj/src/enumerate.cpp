// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "errors.hpp"
#include "lemma.hpp"

namespace wilf {

namespace {

constexpr std::int64_t gap_bound(std::int64_t genus) { return 2 * genus - 1; }

// Pre-order walk. The functor returns Stop to abandon the whole walk, Prune
// to skip the children of the current node, or Descend.
enum class Step { Stop, Prune, Descend };

template <class F>
bool tree_walk(const NumericalSemigroup& s, std::int64_t genus, std::int64_t limit, F&& f) {
    Step step = f(s, genus);
    if (step == Step::Stop)
        return false;
    if (step == Step::Prune || genus >= limit)
        return true;
    for (std::int64_t a : s.atoms()) {
        if (a <= s.frobenius())
            continue;
        // Classical fact: genus-g semigroups have Frobenius number <= 2g-1.
        // The child's Frobenius number is a, so this doubles as a self-check.
        if (a > gap_bound(genus + 1))
            throw Error(ErrorCode::Internal, "tree child breaks the f <= 2g-1 bound");
        if (!tree_walk(s.remove_effective_generator(a), genus + 1, limit, f))
            return false;
    }
    return true;
}

} // namespace

std::uint64_t enumerate_tree(
    std::int64_t genus_bound,
    const std::function<bool(const NumericalSemigroup&, std::int64_t genus)>& visit) {
    if (genus_bound < 0)
        throw Error(ErrorCode::InvalidArgument, "genus bound must be >= 0");
    std::uint64_t count = 0;
    tree_walk(NumericalSemigroup::naturals(), 0, genus_bound,
              [&](const NumericalSemigroup& s, std::int64_t genus) {
                  ++count;
                  return visit(s, genus) ? Step::Descend : Step::Stop;
              });
    return count;
}

std::vector<NumericalSemigroup> enumerate_bruteforce(std::int64_t genus, std::int64_t cap) {
    if (genus < 0)
        throw Error(ErrorCode::InvalidArgument, "genus must be >= 0");
    if (genus > cap)
        throw Error(ErrorCode::CapExceeded,
                    "brute-force oracle supports genus <= " + std::to_string(cap) +
                        ", got " + std::to_string(genus));
    std::vector<NumericalSemigroup> out;
    if (genus == 0) {
        out.push_back(NumericalSemigroup::naturals());
        return out;
    }
    const std::int64_t top = gap_bound(genus); // every gap lies in {1, ..., 2g-1}
    if (top > 62)
        throw Error(ErrorCode::CapExceeded, "brute-force oracle limited to genus <= 31");

    // Walk all genus-element subsets of {1, ..., top} in lexicographic order.
    std::vector<std::int64_t> pick(static_cast<std::size_t>(genus));
    for (std::int64_t i = 0; i < genus; ++i)
        pick[static_cast<std::size_t>(i)] = i + 1;
    const auto g = static_cast<std::size_t>(genus);
    for (;;) {
        std::uint64_t gap_mask = 0;
        for (std::int64_t v : pick)
            gap_mask |= std::uint64_t{1} << v;
        // The complement is additively closed iff no two non-gaps sum to a gap.
        bool closed = true;
        for (std::int64_t a = 1; closed && 2 * a <= top; ++a) {
            if (gap_mask >> a & 1)
                continue;
            for (std::int64_t b = a; a + b <= top; ++b) {
                if (gap_mask >> b & 1)
                    continue;
                if (gap_mask >> (a + b) & 1) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed)
            out.push_back(NumericalSemigroup::from_gaps(pick));

        // Next combination.
        std::size_t i = g;
        while (i > 0 && pick[i - 1] == top - static_cast<std::int64_t>(g - i))
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t j = i; j < g; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(),
              [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
                  return a.atoms() < b.atoms();
              });
    return out;
}

void PerBoundStats::absorb(const BoundCheck& check, const std::vector<std::int64_t>& atoms,
                           std::int64_t genus) {
    ++checked;
    if (!check.holds)
        ++violations;
    if (check.is_equality)
        ++equalities;
    if (!min_slack || check.slack < *min_slack ||
        (check.slack == *min_slack && atoms < argmin_atoms)) {
        min_slack = check.slack;
        argmin_atoms = atoms;
        argmin_genus = genus;
    }
}

void PerBoundStats::merge(const PerBoundStats& other) {
    if (other.id != id)
        throw Error(ErrorCode::MismatchedInputs, "merging stats for different bounds");
    checked += other.checked;
    violations += other.violations;
    equalities += other.equalities;
    if (other.min_slack &&
        (!min_slack || *other.min_slack < *min_slack ||
         (*other.min_slack == *min_slack && other.argmin_atoms < argmin_atoms))) {
        min_slack = other.min_slack;
        argmin_atoms = other.argmin_atoms;
        argmin_genus = other.argmin_genus;
    }
}

void CoverStats::merge(const CoverStats& o) {
    built += o.built;
    witness_failures += o.witness_failures;
    holds += o.holds;
    violations += o.violations;
}

void ScanReport::merge(const ScanReport& other) {
    if (other.genus_bound != genus_bound || other.bounds != bounds ||
        other.per_bound.size() != per_bound.size())
        throw Error(ErrorCode::MismatchedInputs, "merging reports from different scans");
    for (std::size_t i = 0; i < counts_per_genus.size(); ++i)
        counts_per_genus[i] += other.counts_per_genus[i];
    semigroups_visited += other.semigroups_visited;
    semigroups_checked += other.semigroups_checked;
    for (std::size_t i = 0; i < per_bound.size(); ++i)
        per_bound[i].merge(other.per_bound[i]);
    cover.merge(other.cover);
    counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                           other.counterexamples.end());
    halted_early = halted_early || other.halted_early;
    wall_time_ms = std::max(wall_time_ms, other.wall_time_ms);
}

BoundMask parse_bounds(std::string_view spec) {
    if (spec == "all")
        return kAllBoundsMask;
    BoundMask mask = 0;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string_view::npos)
            comma = spec.size();
        std::string_view token = spec.substr(pos, comma - pos);
        if (token.empty())
            throw Error(ErrorCode::InvalidArgument, "empty bound name in list");
        std::optional<BoundId> id = bound_from_cli_name(token);
        if (!id)
            throw Error(ErrorCode::InvalidArgument,
                        "unknown bound name: " + std::string(token));
        mask |= bound_bit(*id);
        pos = comma + 1;
    }
    if (mask == 0)
        throw Error(ErrorCode::InvalidArgument, "no bounds selected");
    return mask;
}

namespace {

std::vector<PerBoundStats> selected_stats(BoundMask mask) {
    std::vector<PerBoundStats> v;
    for (BoundId id : kAllBounds)
        if (mask & bound_bit(id)) {
            PerBoundStats s;
            s.id = id;
            v.push_back(std::move(s));
        }
    return v;
}

void append_rational_cells(std::string& row, const Rational& r) {
    row += ',';
    row += std::to_string(r.num());
    row += ',';
    row += std::to_string(r.den());
}

std::string csv_row(const InvariantSet& inv, std::int64_t genus, BoundMask mask,
                    const std::array<std::optional<BoundCheck>, kAllBounds.size()>& checks) {
    std::string row = std::to_string(genus);
    row += ",\"";
    for (std::size_t i = 0; i < inv.atoms.size(); ++i) {
        if (i)
            row += ',';
        row += std::to_string(inv.atoms[i]);
    }
    row += '"';
    row += ',';
    row += std::to_string(inv.frobenius);
    row += ',';
    row += std::to_string(inv.genus);
    row += ',';
    row += std::to_string(inv.embedding_dim);
    row += ',';
    row += std::to_string(inv.multiplicity);
    append_rational_cells(row, inv.wilf_density);
    for (BoundId id : kAllBounds) {
        if (!(mask & bound_bit(id)))
            continue;
        const auto& c = checks[static_cast<std::size_t>(id)];
        if (!c) {
            row += ",,,"; // bound not applicable (PROP_A outside e in {4,5})
            continue;
        }
        append_rational_cells(row, c->slack);
        row += ',';
        row += c->holds ? '1' : '0';
    }
    return row;
}

// Scan state shared by the serial collection phase and the subtree workers.
struct ScanDriver {
    const ScanOptions& opt;
    std::atomic<bool> stop{false};

    explicit ScanDriver(const ScanOptions& o) : opt(o) {}

    ScanReport fresh_report() const {
        ScanReport r;
        r.genus_bound = opt.genus_bound;
        r.bounds = opt.bounds;
        r.counts_per_genus.assign(static_cast<std::size_t>(opt.genus_bound) + 1, 0);
        r.per_bound = selected_stats(opt.bounds);
        return r;
    }

    // Processes one visited node into `r`. Writes the node's CSV row into
    // `row_out` when collecting and genus >= 1.
    void process(const NumericalSemigroup& s, std::int64_t genus, ScanReport& r,
                 std::string* row_out) {
        ++r.semigroups_visited;
        ++r.counts_per_genus[static_cast<std::size_t>(genus)];
        if (genus == 0)
            return;
        if (opt.debug_validate) {
            NumericalSemigroup rebuilt = NumericalSemigroup::from_generators(s.atoms());
            if (!(rebuilt == s))
                throw Error(ErrorCode::Internal,
                            "incremental child disagrees with from_generators");
        }
        ++r.semigroups_checked;
        InvariantSet inv = invariants_of(s);
        std::array<std::optional<BoundCheck>, kAllBounds.size()> checks{};
        bool violated = false;
        std::size_t slot = 0;
        for (BoundId id : kAllBounds) {
            if (!(opt.bounds & bound_bit(id)))
                continue;
            PerBoundStats& st = r.per_bound[slot++];
            if (id == BoundId::PropA && (inv.embedding_dim < 4 || inv.embedding_dim > 5))
                continue;
            BoundCheck c = check_bound(id, inv);
            st.absorb(c, inv.atoms, genus);
            if (!c.holds) {
                r.counterexamples.push_back({inv.atoms, genus, std::string(bound_tag(id))});
                violated = true;
            }
            checks[static_cast<std::size_t>(id)] = c;
        }
        if (opt.check_cover) {
            try {
                WitnessCover cover = build_witness_cover(s);
                ++r.cover.built;
                LemmaVerification v = verify_lemma_bound(cover, inv);
                if (v.lower_holds && v.upper_holds) {
                    ++r.cover.holds;
                } else {
                    ++r.cover.violations;
                    r.counterexamples.push_back({inv.atoms, genus, "WITNESS_COVER"});
                    violated = true;
                }
            } catch (const Error& e) {
                if (e.code() != ErrorCode::WitnessNotFound)
                    throw;
                ++r.cover.witness_failures;
                ++r.cover.violations;
                r.counterexamples.push_back({inv.atoms, genus, "WITNESS_COVER"});
                violated = true;
            }
        }
        if (row_out)
            *row_out = csv_row(inv, genus, opt.bounds, checks);
        if (violated && opt.halt_on_violation)
            stop.store(true, std::memory_order_relaxed);
    }
};

} // namespace

ScanReport scan(const ScanOptions& options) {
    if (options.genus_bound < 1)
        throw Error(ErrorCode::InvalidArgument, "genus bound must be >= 1");
    if (options.bounds == 0 || (options.bounds & ~kAllBoundsMask) != 0)
        throw Error(ErrorCode::InvalidArgument, "invalid bound selection");
    const auto t0 = std::chrono::steady_clock::now();

    ScanDriver driver(options);
    const std::int64_t split = std::clamp<std::int64_t>(options.split_depth, 0,
                                                        options.genus_bound);

    // Phase 1: walk the tree above the split serially, recording subtree
    // roots at the split genus as parallel work items. Row segments remember
    // where each subtree's rows belong so output order matches a serial walk.
    ScanReport base = driver.fresh_report();
    std::vector<NumericalSemigroup> items;
    constexpr std::size_t kBaseRow = static_cast<std::size_t>(-1);
    std::vector<std::pair<std::size_t, std::string>> segments; // (item index, base row)
    tree_walk(NumericalSemigroup::naturals(), 0, split,
              [&](const NumericalSemigroup& s, std::int64_t genus) {
                  if (genus == split && split < options.genus_bound) {
                      if (options.collect_rows)
                          segments.emplace_back(items.size(), std::string{});
                      items.push_back(s);
                      return Step::Prune;
                  }
                  std::string row;
                  driver.process(s, genus, base, options.collect_rows ? &row : nullptr);
                  if (options.collect_rows && !row.empty())
                      segments.emplace_back(kBaseRow, std::move(row));
                  return Step::Descend;
              });

    // Phase 2: drain the work queue. Workers own disjoint per-item row
    // buffers and private reports, so the merged result is independent of
    // scheduling; all statistics are exact, so merge order cannot matter.
    std::vector<std::vector<std::string>> item_rows(items.size());
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = options.threads > 0 ? static_cast<std::size_t>(options.threads)
                                              : std::max(1u, hw);
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(items.size(), 1));
    std::vector<ScanReport> locals;
    locals.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        locals.push_back(driver.fresh_report());

    std::atomic<std::size_t> next{0};
    std::atomic<bool> worker_failed{false};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto drain = [&](std::size_t w) {
        try {
            for (;;) {
                std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= items.size())
                    break;
                if (driver.stop.load(std::memory_order_relaxed) || worker_failed.load())
                    break;
                tree_walk(items[i], split, options.genus_bound,
                          [&](const NumericalSemigroup& s, std::int64_t genus) {
                              if (driver.stop.load(std::memory_order_relaxed))
                                  return Step::Stop;
                              std::string row;
                              driver.process(s, genus, locals[w],
                                             options.collect_rows ? &row : nullptr);
                              if (options.collect_rows && !row.empty())
                                  item_rows[i].push_back(std::move(row));
                              return Step::Descend;
                          });
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!first_error)
                first_error = std::current_exception();
            worker_failed.store(true);
        }
    };

    if (workers == 1) {
        drain(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(drain, w);
        for (auto& t : pool)
            t.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);

    ScanReport total = std::move(base);
    for (const ScanReport& r : locals)
        total.merge(r);
    std::sort(total.counterexamples.begin(), total.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  if (a.genus != b.genus)
                      return a.genus < b.genus;
                  if (a.atoms != b.atoms)
                      return a.atoms < b.atoms;
                  return a.what < b.what;
              });
    if (driver.stop.load())
        total.halted_early = true;
    if (options.collect_rows) {
        total.csv_rows.clear();
        for (auto& [item, row] : segments) {
            if (item == kBaseRow)
                total.csv_rows.push_back(std::move(row));
            else
                for (auto& r : item_rows[item])
                    total.csv_rows.push_back(std::move(r));
        }
    }
    total.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              t0)
            .count());
    return total;
}

std::string scan_csv_row(const InvariantSet& inv, BoundMask bounds) {
    std::array<std::optional<BoundCheck>, kAllBounds.size()> checks{};
    for (BoundId id : kAllBounds) {
        if (!(bounds & bound_bit(id)))
            continue;
        if (id == BoundId::PropA && (inv.embedding_dim < 4 || inv.embedding_dim > 5))
            continue;
        checks[static_cast<std::size_t>(id)] = check_bound(id, inv);
    }
    return csv_row(inv, inv.genus, bounds, checks);
}

std::string scan_csv_header(BoundMask bounds) {
    std::string h = "genus,atom_list,f,g,e,m,d_num,d_den";
    for (BoundId id : kAllBounds) {
        if (!(bounds & bound_bit(id)))
            continue;
        std::string name{bound_cli_name(id)};
        h += ',';
        h += name + "_slack_num," + name + "_slack_den," + name + "_holds";
    }
    return h;
}

namespace {

bool extremal_less(const ExtremalEntry& a, const ExtremalEntry& b) {
    if (a.slack != b.slack)
        return a.slack < b.slack;
    return a.inv.atoms < b.inv.atoms;
}

void consider_entry(std::vector<ExtremalEntry>& top, std::size_t k, ExtremalEntry e) {
    auto it = std::upper_bound(top.begin(), top.end(), e, extremal_less);
    if (top.size() >= k && it == top.end())
        return;
    top.insert(it, std::move(e));
    if (top.size() > k)
        top.pop_back();
}

} // namespace

std::vector<ExtremalEntry> extremal(std::int64_t genus_bound, BoundId metric,
                                    std::size_t top_k, int threads) {
    if (genus_bound < 1)
        throw Error(ErrorCode::InvalidArgument, "genus bound must be >= 1");
    if (top_k == 0)
        throw Error(ErrorCode::InvalidArgument, "top-k must be >= 1");
    (void)threads; // the walk below is cheap enough to run on one thread
    std::vector<ExtremalEntry> top;
    enumerate_tree(genus_bound, [&](const NumericalSemigroup& s, std::int64_t genus) {
        if (genus == 0)
            return true;
        InvariantSet inv = invariants_of(s);
        if (metric == BoundId::PropA && (inv.embedding_dim < 4 || inv.embedding_dim > 5))
            return true;
        BoundCheck c = check_bound(metric, inv);
        ExtremalEntry e;
        e.inv = std::move(inv);
        e.genus = genus;
        e.slack = c.slack;
        e.is_equality = c.is_equality;
        consider_entry(top, top_k, std::move(e));
        return true;
    });
    return top;
}

} // namespace wilf
