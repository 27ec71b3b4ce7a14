// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef WILF_REPORT_HPP
#define WILF_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enumerate.hpp"
#include "semigroup.hpp"

namespace wilf {

enum class ReportFormat { Json, Csv };

// "json" or "csv"; throws InvalidArgument otherwise.
ReportFormat report_format_from_name(std::string_view name);

// Every document shares the envelope {schema_version, command, payload}.
// JSON is rendered deterministically (fixed key order, 2-space indent);
// CSV is a header line plus data rows with the same numeric content.
// Rationals appear as {"num": i, "den": j} in lowest terms plus a
// display-only "approx" decimal; CSV carries the num/den pairs.

struct InspectReport {
    std::string text;
    bool all_hold = false; // every bound check and the witness chain
};
InspectReport report_inspect(const NumericalSemigroup& s, ReportFormat format,
                             std::string_view command_echo);

struct VerifyReport {
    std::string text;
    bool ok = false;                  // zero counterexamples and nothing halted
    std::string first_counterexample; // one-line description, empty when ok
};
VerifyReport report_verify(const ScanReport& report, ReportFormat format,
                           std::string_view command_echo);

struct CountReport {
    std::string text;
    bool ok = false; // oracle agreed (or was not requested)
};
// counts[g] = number of semigroups of genus g, 0 <= g <= genus bound.
// oracle_counts, when present, covers genus 0..oracle_counts->size()-1.
CountReport report_count(const std::vector<std::uint64_t>& counts,
                         const std::optional<std::vector<std::uint64_t>>& oracle_counts,
                         ReportFormat format, std::string_view command_echo);

std::string report_extremal(BoundId metric, std::int64_t genus_bound,
                            const std::vector<ExtremalEntry>& entries, ReportFormat format,
                            std::string_view command_echo);

} // namespace wilf

#endif
