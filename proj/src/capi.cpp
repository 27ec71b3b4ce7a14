// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// C shim over the C++ core: opaque handles, status codes, malloc'd strings.
// Exceptions never cross this boundary.

#include "wilf/wilf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "lemma.hpp"
#include "report.hpp"
#include "semigroup.hpp"

struct wilf_semigroup {
    wilf::NumericalSemigroup s;
};

struct wilf_witness_cover {
    wilf::WitnessCover cover;
};

namespace {

thread_local std::string t_last_error;

wilf_status map_code(wilf::ErrorCode code) {
    using wilf::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument: return WILF_ERR_INVALID_ARGUMENT;
    case ErrorCode::GcdNotOne: return WILF_ERR_GCD_NOT_ONE;
    case ErrorCode::InvalidGapSet: return WILF_ERR_INVALID_GAP_SET;
    case ErrorCode::Overflow: return WILF_ERR_OVERFLOW;
    case ErrorCode::IsFullSemigroup: return WILF_ERR_FULL_SEMIGROUP;
    case ErrorCode::UnsupportedEmbeddingDim: return WILF_ERR_UNSUPPORTED_EMBEDDING_DIM;
    case ErrorCode::CapExceeded: return WILF_ERR_CAP_EXCEEDED;
    case ErrorCode::WitnessNotFound: return WILF_ERR_WITNESS_NOT_FOUND;
    case ErrorCode::MismatchedInputs: return WILF_ERR_MISMATCHED_INPUTS;
    case ErrorCode::Internal: return WILF_ERR_INTERNAL;
    }
    return WILF_ERR_INTERNAL;
}

template <class F>
wilf_status guarded(F&& body) noexcept {
    try {
        body();
        return WILF_OK;
    } catch (const wilf::Error& e) {
        t_last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return WILF_ERR_NOMEM;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return WILF_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return WILF_ERR_INTERNAL;
    }
}

wilf_status invalid(const char* message) {
    t_last_error = message;
    return WILF_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void fill_check(const wilf::BoundCheck& c, wilf_bound_check* out) {
    out->bound_id = static_cast<int>(c.id);
    out->relation_ge = c.ge ? 1 : 0;
    out->strict = c.strict ? 1 : 0;
    out->lhs_num = c.lhs.num();
    out->lhs_den = c.lhs.den();
    out->rhs_num = c.rhs.num();
    out->rhs_den = c.rhs.den();
    out->slack_num = c.slack.num();
    out->slack_den = c.slack.den();
    out->holds = c.holds ? 1 : 0;
    out->is_equality = c.is_equality ? 1 : 0;
    out->branch = static_cast<int>(c.branch);
}

} // namespace

extern "C" {

const char* wilf_status_name(wilf_status status) {
    switch (status) {
    case WILF_OK: return "WILF_OK";
    case WILF_ERR_INVALID_ARGUMENT: return "WILF_ERR_INVALID_ARGUMENT";
    case WILF_ERR_GCD_NOT_ONE: return "WILF_ERR_GCD_NOT_ONE";
    case WILF_ERR_INVALID_GAP_SET: return "WILF_ERR_INVALID_GAP_SET";
    case WILF_ERR_OVERFLOW: return "WILF_ERR_OVERFLOW";
    case WILF_ERR_FULL_SEMIGROUP: return "WILF_ERR_FULL_SEMIGROUP";
    case WILF_ERR_UNSUPPORTED_EMBEDDING_DIM: return "WILF_ERR_UNSUPPORTED_EMBEDDING_DIM";
    case WILF_ERR_CAP_EXCEEDED: return "WILF_ERR_CAP_EXCEEDED";
    case WILF_ERR_WITNESS_NOT_FOUND: return "WILF_ERR_WITNESS_NOT_FOUND";
    case WILF_ERR_MISMATCHED_INPUTS: return "WILF_ERR_MISMATCHED_INPUTS";
    case WILF_ERR_INTERNAL: return "WILF_ERR_INTERNAL";
    case WILF_ERR_NOMEM: return "WILF_ERR_NOMEM";
    }
    return "WILF_ERR_UNKNOWN";
}

const char* wilf_last_error(void) {
    return t_last_error.c_str();
}

void wilf_string_free(char* s) {
    std::free(s);
}

wilf_status wilf_semigroup_from_generators(const int64_t* generators, size_t count,
                                           wilf_semigroup** out) {
    if (!out || (!generators && count > 0))
        return invalid("null pointer argument");
    *out = nullptr;
    return guarded([&] {
        auto s = wilf::NumericalSemigroup::from_generators({generators, count});
        *out = new wilf_semigroup{std::move(s)};
    });
}

wilf_status wilf_semigroup_from_gaps(const int64_t* gaps, size_t count, wilf_semigroup** out) {
    if (!out || (!gaps && count > 0))
        return invalid("null pointer argument");
    *out = nullptr;
    return guarded([&] {
        auto s = wilf::NumericalSemigroup::from_gaps({gaps, count});
        *out = new wilf_semigroup{std::move(s)};
    });
}

wilf_status wilf_semigroup_child(const wilf_semigroup* s, int64_t atom, wilf_semigroup** out) {
    if (!s || !out)
        return invalid("null pointer argument");
    *out = nullptr;
    return guarded([&] { *out = new wilf_semigroup{s->s.remove_effective_generator(atom)}; });
}

void wilf_semigroup_free(wilf_semigroup* s) {
    delete s;
}

int wilf_semigroup_contains(const wilf_semigroup* s, int64_t n) {
    return s->s.contains(n) ? 1 : 0;
}

int64_t wilf_semigroup_frobenius(const wilf_semigroup* s) {
    return s->s.frobenius();
}

int64_t wilf_semigroup_genus(const wilf_semigroup* s) {
    return s->s.genus();
}

int64_t wilf_semigroup_multiplicity(const wilf_semigroup* s) {
    return s->s.multiplicity();
}

int64_t wilf_semigroup_embedding_dim(const wilf_semigroup* s) {
    return static_cast<int64_t>(s->s.atoms().size());
}

wilf_status wilf_semigroup_atoms(const wilf_semigroup* s, int64_t* buf, size_t cap,
                                 size_t* out_count) {
    if (!s || !out_count || (!buf && cap > 0))
        return invalid("null pointer argument");
    const auto& atoms = s->s.atoms();
    *out_count = atoms.size();
    if (cap < atoms.size())
        return invalid("atom buffer too small");
    std::memcpy(buf, atoms.data(), atoms.size() * sizeof(int64_t));
    return WILF_OK;
}

wilf_status wilf_semigroup_invariants(const wilf_semigroup* s, wilf_invariants* out) {
    if (!s || !out)
        return invalid("null pointer argument");
    return guarded([&] {
        wilf::InvariantSet inv = wilf::invariants_of(s->s);
        out->frobenius = inv.frobenius;
        out->genus = inv.genus;
        out->multiplicity = inv.multiplicity;
        out->embedding_dim = inv.embedding_dim;
        out->sporadic_count = inv.sporadic_count;
        out->density_num = inv.wilf_density.num();
        out->density_den = inv.wilf_density.den();
        out->wilf_number = wilf::wilf_number(s->s);
    });
}

const char* wilf_bound_tag(int bound_id) {
    if (bound_id < 0 || bound_id >= WILF_BOUND_COUNT)
        return nullptr;
    return wilf::bound_tag(static_cast<wilf::BoundId>(bound_id)).data();
}

wilf_status wilf_check_bound(const wilf_semigroup* s, int bound_id, wilf_bound_check* out) {
    if (!s || !out)
        return invalid("null pointer argument");
    if (bound_id < 0 || bound_id >= WILF_BOUND_COUNT)
        return invalid("bound id out of range");
    return guarded([&] {
        wilf::InvariantSet inv = wilf::invariants_of(s->s);
        fill_check(wilf::check_bound(static_cast<wilf::BoundId>(bound_id), inv), out);
    });
}

wilf_status wilf_check_all(const wilf_semigroup* s, wilf_bound_check* buf, size_t* out_count) {
    if (!s || !buf || !out_count)
        return invalid("null pointer argument");
    return guarded([&] {
        wilf::InvariantSet inv = wilf::invariants_of(s->s);
        std::vector<wilf::BoundCheck> checks = wilf::check_all(inv);
        for (size_t i = 0; i < checks.size(); ++i)
            fill_check(checks[i], buf + i);
        *out_count = checks.size();
    });
}

wilf_status wilf_witness_cover_build(const wilf_semigroup* s, wilf_witness_cover** out) {
    if (!s || !out)
        return invalid("null pointer argument");
    *out = nullptr;
    return guarded([&] { *out = new wilf_witness_cover{wilf::build_witness_cover(s->s)}; });
}

void wilf_witness_cover_free(wilf_witness_cover* cover) {
    delete cover;
}

int64_t wilf_witness_cover_size(const wilf_witness_cover* cover) {
    return cover->cover.cover_size;
}

wilf_status wilf_witness_cover_verify(const wilf_witness_cover* cover, const wilf_semigroup* s,
                                      int* out_lower_holds, int* out_upper_holds) {
    if (!cover || !s || !out_lower_holds || !out_upper_holds)
        return invalid("null pointer argument");
    return guarded([&] {
        wilf::InvariantSet inv = wilf::invariants_of(s->s);
        wilf::LemmaVerification v = wilf::verify_lemma_bound(cover->cover, inv);
        *out_lower_holds = v.lower_holds ? 1 : 0;
        *out_upper_holds = v.upper_holds ? 1 : 0;
    });
}

wilf_status wilf_enumerate_tree(int64_t genus_bound, wilf_visit_fn visit, void* user,
                                uint64_t* out_count) {
    if (!visit)
        return invalid("null visitor");
    return guarded([&] {
        uint64_t n = wilf::enumerate_tree(
            genus_bound, [&](const wilf::NumericalSemigroup& s, int64_t genus) {
                wilf_semigroup view{s};
                return visit(&view, genus, user) == 0;
            });
        if (out_count)
            *out_count = n;
    });
}

wilf_status wilf_bruteforce_count(int64_t genus, uint64_t* out_count) {
    if (!out_count)
        return invalid("null pointer argument");
    return guarded(
        [&] { *out_count = wilf::enumerate_bruteforce(genus).size(); });
}

wilf_status wilf_report_inspect(const int64_t* generators, size_t count, const char* format,
                                const char* command_echo, char** out_text, int* out_all_hold) {
    if (!out_text || !out_all_hold || (!generators && count > 0))
        return invalid("null pointer argument");
    *out_text = nullptr;
    return guarded([&] {
        auto s = wilf::NumericalSemigroup::from_generators({generators, count});
        wilf::ReportFormat fmt = wilf::report_format_from_name(format ? format : "json");
        wilf::InspectReport rep =
            wilf::report_inspect(s, fmt, command_echo ? command_echo : "");
        *out_text = dup_string(rep.text);
        *out_all_hold = rep.all_hold ? 1 : 0;
    });
}

wilf_status wilf_report_verify(int64_t max_genus, const char* bounds, int threads,
                               const char* format, const char* command_echo, char** out_text,
                               char** out_counterexample, int* out_ok) {
    if (!out_text || !out_ok)
        return invalid("null pointer argument");
    *out_text = nullptr;
    if (out_counterexample)
        *out_counterexample = nullptr;
    return guarded([&] {
        wilf::ReportFormat fmt = wilf::report_format_from_name(format ? format : "json");
        wilf::ScanOptions opt;
        opt.genus_bound = max_genus;
        opt.bounds = wilf::parse_bounds(bounds ? bounds : "all");
        opt.threads = threads;
        opt.collect_rows = fmt == wilf::ReportFormat::Csv;
        wilf::ScanReport report = wilf::scan(opt);
        wilf::VerifyReport rep =
            wilf::report_verify(report, fmt, command_echo ? command_echo : "");
        *out_text = dup_string(rep.text);
        if (out_counterexample && !rep.first_counterexample.empty())
            *out_counterexample = dup_string(rep.first_counterexample);
        *out_ok = rep.ok ? 1 : 0;
    });
}

wilf_status wilf_report_count(int64_t max_genus, int64_t oracle_check, const char* format,
                              const char* command_echo, char** out_text, int* out_ok) {
    if (!out_text || !out_ok)
        return invalid("null pointer argument");
    *out_text = nullptr;
    return guarded([&] {
        wilf::ReportFormat fmt = wilf::report_format_from_name(format ? format : "json");
        if (max_genus < 0)
            throw wilf::Error(wilf::ErrorCode::InvalidArgument, "genus bound must be >= 0");
        std::vector<uint64_t> counts(static_cast<size_t>(max_genus) + 1, 0);
        wilf::enumerate_tree(max_genus, [&](const wilf::NumericalSemigroup&, int64_t genus) {
            ++counts[static_cast<size_t>(genus)];
            return true;
        });
        std::optional<std::vector<uint64_t>> oracle;
        if (oracle_check >= 0) {
            if (oracle_check > max_genus)
                throw wilf::Error(wilf::ErrorCode::MismatchedInputs,
                                  "oracle check range exceeds --max-genus");
            oracle.emplace();
            for (int64_t g = 0; g <= oracle_check; ++g)
                oracle->push_back(wilf::enumerate_bruteforce(g).size());
        }
        wilf::CountReport rep =
            wilf::report_count(counts, oracle, fmt, command_echo ? command_echo : "");
        *out_text = dup_string(rep.text);
        *out_ok = rep.ok ? 1 : 0;
    });
}

wilf_status wilf_report_extremal(int64_t max_genus, const char* metric, int64_t top_k,
                                 const char* format, const char* command_echo,
                                 char** out_text) {
    if (!out_text || !metric)
        return invalid("null pointer argument");
    *out_text = nullptr;
    return guarded([&] {
        wilf::ReportFormat fmt = wilf::report_format_from_name(format ? format : "json");
        std::optional<wilf::BoundId> id = wilf::bound_from_cli_name(metric);
        if (!id)
            throw wilf::Error(wilf::ErrorCode::InvalidArgument,
                              "unknown metric: " + std::string(metric));
        if (top_k < 1)
            throw wilf::Error(wilf::ErrorCode::InvalidArgument, "top-k must be >= 1");
        std::vector<wilf::ExtremalEntry> entries =
            wilf::extremal(max_genus, *id, static_cast<size_t>(top_k));
        *out_text = dup_string(wilf::report_extremal(*id, max_genus, entries, fmt,
                                                     command_echo ? command_echo : ""));
    });
}

} // extern "C"
