// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include <cstdio>

#include "json.hpp"

#include "bounds.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "lemma.hpp"

namespace wilf {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string approx_string(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g",
                  static_cast<double>(r.num()) / static_cast<double>(r.den()));
    return buf;
}

ordered_json rational_json(const Rational& r) {
    return ordered_json{{"num", r.num()}, {"den", r.den()}, {"approx", approx_string(r)}};
}

ordered_json bound_check_json(const BoundCheck& c) {
    ordered_json j{
        {"bound", bound_tag(c.id)},
        {"relation", c.ge ? "ge" : "le"},
        {"strict", c.strict},
        {"lhs", rational_json(c.lhs)},
        {"rhs", rational_json(c.rhs)},
        {"slack", rational_json(c.slack)},
        {"holds", c.holds},
        {"is_equality", c.is_equality},
    };
    if (c.branch != PropABranch::None)
        j["branch"] =
            c.branch == PropABranch::ConductorLe3m ? "CONDUCTOR_LE_3M" : "CONDUCTOR_GT_3M";
    return j;
}

std::string render_document(std::string_view command, ordered_json payload) {
    ordered_json doc{
        {"schema_version", "1"},
        {"command", command},
        {"payload", std::move(payload)},
    };
    return doc.dump(2) + "\n";
}

std::string quoted_atom_list(const std::vector<std::int64_t>& atoms) {
    std::string s = "\"";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(atoms[i]);
    }
    s += '"';
    return s;
}

std::string join_rows(const std::string& header, const std::vector<std::string>& rows) {
    std::string out = header;
    out += '\n';
    for (const std::string& r : rows) {
        out += r;
        out += '\n';
    }
    return out;
}

} // namespace

ReportFormat report_format_from_name(std::string_view name) {
    if (name == "json")
        return ReportFormat::Json;
    if (name == "csv")
        return ReportFormat::Csv;
    throw Error(ErrorCode::InvalidArgument,
                "unknown format: " + std::string(name) + " (expected json or csv)");
}

InspectReport report_inspect(const NumericalSemigroup& s, ReportFormat format,
                             std::string_view command_echo) {
    InvariantSet inv = invariants_of(s);
    std::vector<BoundCheck> checks = check_all(inv);
    WitnessCover cover = build_witness_cover(s);
    LemmaVerification lemma = verify_lemma_bound(cover, inv);

    InspectReport out;
    out.all_hold = lemma.lower_holds && lemma.upper_holds;
    for (const BoundCheck& c : checks)
        out.all_hold = out.all_hold && c.holds;

    if (format == ReportFormat::Csv) {
        out.text = join_rows(scan_csv_header(kAllBoundsMask), {scan_csv_row(inv, kAllBoundsMask)});
        return out;
    }

    ordered_json sg{
        {"atoms", inv.atoms},
        {"frobenius", inv.frobenius},
        {"conductor", inv.frobenius + 1},
        {"genus", inv.genus},
        {"multiplicity", inv.multiplicity},
        {"embedding_dim", inv.embedding_dim},
        {"gaps", s.gaps()},
        {"sporadic", sporadic_elements(s)},
        {"sporadic_count", inv.sporadic_count},
        {"wilf_density", rational_json(inv.wilf_density)},
        {"wilf_number", wilf_number(s)},
    };
    ordered_json bounds = ordered_json::array();
    for (const BoundCheck& c : checks)
        bounds.push_back(bound_check_json(c));
    ordered_json assignments = ordered_json::array();
    for (const WitnessAssignment& a : cover.assignments)
        assignments.push_back(
            ordered_json{{"x", a.x}, {"atom", a.atom}, {"sporadic", a.sporadic}});
    ordered_json witness{
        {"window_first", cover.window_first},
        {"window_last", cover.window_last},
        {"assignments", std::move(assignments)},
        {"cover", cover.cover_set},
        {"cover_size", cover.cover_size},
        {"lower_holds", lemma.lower_holds},
        {"upper_holds", lemma.upper_holds},
        {"chain",
         ordered_json{{"m_minus_1", inv.multiplicity - 1},
                      {"cover_size", cover.cover_size},
                      {"upper", (inv.embedding_dim - 1) * inv.sporadic_count}}},
    };
    ordered_json payload{
        {"semigroup", std::move(sg)},
        {"bounds", std::move(bounds)},
        {"witness_cover", std::move(witness)},
        {"all_hold", out.all_hold},
    };
    out.text = render_document(command_echo, std::move(payload));
    return out;
}

VerifyReport report_verify(const ScanReport& report, ReportFormat format,
                           std::string_view command_echo) {
    VerifyReport out;
    out.ok = report.counterexamples.empty() && !report.halted_early;
    if (!report.counterexamples.empty()) {
        const Counterexample& c = report.counterexamples.front();
        std::string atoms;
        for (std::size_t i = 0; i < c.atoms.size(); ++i) {
            if (i)
                atoms += ',';
            atoms += std::to_string(c.atoms[i]);
        }
        out.first_counterexample =
            "counterexample: <" + atoms + "> genus " + std::to_string(c.genus) + " " + c.what;
    }

    if (format == ReportFormat::Csv) {
        out.text = join_rows(scan_csv_header(report.bounds), report.csv_rows);
        return out;
    }

    ordered_json selected = ordered_json::array();
    for (BoundId id : kAllBounds)
        if (report.bounds & bound_bit(id))
            selected.push_back(bound_tag(id));
    ordered_json per_bound = ordered_json::array();
    for (const PerBoundStats& st : report.per_bound) {
        ordered_json j{
            {"bound", bound_tag(st.id)},
            {"checked", st.checked},
            {"violations", st.violations},
            {"equalities", st.equalities},
        };
        if (st.min_slack) {
            j["min_slack"] = rational_json(*st.min_slack);
            j["argmin_atoms"] = st.argmin_atoms;
            j["argmin_genus"] = st.argmin_genus;
        } else {
            j["min_slack"] = nullptr;
            j["argmin_atoms"] = ordered_json::array();
            j["argmin_genus"] = nullptr;
        }
        per_bound.push_back(std::move(j));
    }
    ordered_json counterexamples = ordered_json::array();
    for (const Counterexample& c : report.counterexamples)
        counterexamples.push_back(
            ordered_json{{"atoms", c.atoms}, {"genus", c.genus}, {"what", c.what}});
    ordered_json payload{
        {"genus_bound", report.genus_bound},
        {"bounds", std::move(selected)},
        {"counts_per_genus", report.counts_per_genus},
        {"semigroups_visited", report.semigroups_visited},
        {"semigroups_checked", report.semigroups_checked},
        {"per_bound", std::move(per_bound)},
        {"witness_cover",
         ordered_json{{"built", report.cover.built},
                      {"witness_failures", report.cover.witness_failures},
                      {"holds", report.cover.holds},
                      {"violations", report.cover.violations}}},
        {"counterexamples", std::move(counterexamples)},
        {"halted_early", report.halted_early},
        {"all_hold", out.ok},
        {"wall_time_ms", report.wall_time_ms},
    };
    out.text = render_document(command_echo, std::move(payload));
    return out;
}

CountReport report_count(const std::vector<std::uint64_t>& counts,
                         const std::optional<std::vector<std::uint64_t>>& oracle_counts,
                         ReportFormat format, std::string_view command_echo) {
    CountReport out;
    out.ok = true;
    if (oracle_counts) {
        if (oracle_counts->size() > counts.size())
            throw Error(ErrorCode::MismatchedInputs,
                        "oracle range exceeds the counted genus bound");
        for (std::size_t g = 0; g < oracle_counts->size(); ++g)
            out.ok = out.ok && (*oracle_counts)[g] == counts[g];
    }

    if (format == ReportFormat::Csv) {
        std::vector<std::string> rows;
        for (std::size_t g = 0; g < counts.size(); ++g) {
            std::string row = std::to_string(g) + ',' + std::to_string(counts[g]);
            if (oracle_counts) {
                if (g < oracle_counts->size()) {
                    row += ',' + std::to_string((*oracle_counts)[g]);
                    row += (*oracle_counts)[g] == counts[g] ? ",1" : ",0";
                } else {
                    row += ",,";
                }
            }
            rows.push_back(std::move(row));
        }
        out.text = join_rows(oracle_counts ? "genus,count,oracle,match" : "genus,count", rows);
        return out;
    }

    std::uint64_t total = 0;
    for (std::uint64_t c : counts)
        total += c;
    ordered_json payload{
        {"genus_bound", counts.empty() ? 0 : counts.size() - 1},
        {"counts", counts},
        {"total", total},
    };
    if (oracle_counts)
        payload["oracle"] = ordered_json{{"checked_to", oracle_counts->size() - 1},
                                         {"counts", *oracle_counts},
                                         {"agrees", out.ok}};
    out.text = render_document(command_echo, std::move(payload));
    return out;
}

std::string report_extremal(BoundId metric, std::int64_t genus_bound,
                            const std::vector<ExtremalEntry>& entries, ReportFormat format,
                            std::string_view command_echo) {
    if (format == ReportFormat::Csv) {
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const ExtremalEntry& e = entries[i];
            std::string row = std::to_string(i + 1);
            row += ',' + quoted_atom_list(e.inv.atoms);
            row += ',' + std::to_string(e.genus);
            row += ',' + std::to_string(e.inv.frobenius);
            row += ',' + std::to_string(e.inv.embedding_dim);
            row += ',' + std::to_string(e.inv.multiplicity);
            row += ',' + std::to_string(e.inv.wilf_density.num());
            row += ',' + std::to_string(e.inv.wilf_density.den());
            row += ',' + std::to_string(e.slack.num());
            row += ',' + std::to_string(e.slack.den());
            row += e.is_equality ? ",1" : ",0";
            rows.push_back(std::move(row));
        }
        return join_rows(
            "rank,atom_list,genus,f,e,m,d_num,d_den,slack_num,slack_den,is_equality", rows);
    }

    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const ExtremalEntry& e = entries[i];
        list.push_back(ordered_json{
            {"rank", i + 1},
            {"atoms", e.inv.atoms},
            {"genus", e.genus},
            {"frobenius", e.inv.frobenius},
            {"embedding_dim", e.inv.embedding_dim},
            {"multiplicity", e.inv.multiplicity},
            {"wilf_density", rational_json(e.inv.wilf_density)},
            {"slack", rational_json(e.slack)},
            {"is_equality", e.is_equality},
        });
    }
    ordered_json payload{
        {"metric", bound_tag(metric)},
        {"genus_bound", genus_bound},
        {"entries", std::move(list)},
    };
    return render_document(command_echo, std::move(payload));
}

} // namespace wilf
