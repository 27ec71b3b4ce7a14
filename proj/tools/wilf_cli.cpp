// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// wilf: inspect / verify / count / extremal over numerical semigroups.
// Talks to the core exclusively through the C API. Reports go to stdout,
// diagnostics to stderr. Exit codes: 0 verified, 1 counterexample or
// mismatch, 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wilf/wilf.h"

namespace {

int usage_error(const char* message) {
    std::fprintf(stderr, "error: %s\n", message);
    return 2;
}

int api_error() {
    return usage_error(wilf_last_error());
}

bool parse_int_list(const std::string& text, std::vector<int64_t>& out) {
    out.clear();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        if (comma == pos)
            return false;
        errno = 0;
        char* end = nullptr;
        long long v = std::strtoll(text.c_str() + pos, &end, 10);
        if (errno != 0 || end != text.c_str() + comma)
            return false;
        out.push_back(v);
        pos = comma + 1;
    }
    return !out.empty();
}

// WILF_THREADS applies when no --threads flag was given; the flag wins.
bool resolve_threads(bool flag_given, int flag_value, int& out, std::string& error) {
    if (flag_given) {
        out = flag_value;
        return true;
    }
    const char* env = std::getenv("WILF_THREADS");
    if (!env || !*env) {
        out = 0; // hardware default
        return true;
    }
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (errno != 0 || *end != '\0' || v < 1) {
        error = "invalid WILF_THREADS value: " + std::string(env);
        return false;
    }
    out = static_cast<int>(v);
    return true;
}

void print_report(const char* text) {
    std::fputs(text, stdout);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical semigroup toolkit: Wilf-type bounds, exhaustively checked"};
    app.require_subcommand(1);

    std::string inspect_gens;
    std::string inspect_format = "json";
    CLI::App* inspect = app.add_subcommand("inspect", "Invariants, bound checks, and the "
                                                      "witness cover for one semigroup");
    inspect->add_option("generators", inspect_gens, "Comma-separated generators, e.g. 3,5,7")
        ->required();
    inspect->add_option("--format", inspect_format, "json or csv");

    int64_t verify_max_genus = 0;
    std::string verify_bounds = "all";
    int verify_threads = 0;
    std::string verify_format = "json";
    CLI::App* verify =
        app.add_subcommand("verify", "Check every semigroup up to a genus bound");
    verify->add_option("--max-genus", verify_max_genus, "Largest genus to enumerate")
        ->required();
    verify->add_option("--bounds", verify_bounds,
                       "all, or a comma-separated list: wilf,zhai,lemma3,two_star,"
                       "three_star,prop_a,prop_b");
    CLI::Option* threads_opt =
        verify->add_option("--threads", verify_threads, "Worker count (default: hardware)");
    verify->add_option("--format", verify_format, "json or csv");

    int64_t count_max_genus = 0;
    int64_t count_oracle = -1;
    std::string count_format = "json";
    CLI::App* count = app.add_subcommand("count", "Per-genus semigroup counts from the tree");
    count->add_option("--max-genus", count_max_genus, "Largest genus to count")->required();
    CLI::Option* oracle_opt = count->add_option(
        "--oracle-check", count_oracle, "Cross-check counts up to this genus by brute force");
    count->add_option("--format", count_format, "json or csv");

    int64_t extremal_max_genus = 0;
    std::string extremal_metric;
    int64_t extremal_top = 10;
    std::string extremal_format = "json";
    CLI::App* extremal =
        app.add_subcommand("extremal", "Smallest-slack semigroups for one bound");
    extremal->add_option("--max-genus", extremal_max_genus, "Largest genus to search")
        ->required();
    extremal->add_option("--metric", extremal_metric, "Bound to rank by (CLI name)")
        ->required();
    extremal->add_option("--top", extremal_top, "Number of entries to keep");
    extremal->add_option("--format", extremal_format, "json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::fputs(app.help().c_str(), stdout);
        return 0;
    } catch (const CLI::ParseError& e) {
        return usage_error(e.what());
    }

    if (app.got_subcommand(inspect)) {
        std::vector<int64_t> gens;
        if (!parse_int_list(inspect_gens, gens))
            return usage_error("generators must be a comma-separated list of integers");
        std::string echo = "inspect " + inspect_gens + " --format " + inspect_format;
        char* text = nullptr;
        int all_hold = 0;
        wilf_status st = wilf_report_inspect(gens.data(), gens.size(), inspect_format.c_str(),
                                             echo.c_str(), &text, &all_hold);
        if (st != WILF_OK)
            return api_error();
        print_report(text);
        wilf_string_free(text);
        if (!all_hold) {
            std::fprintf(stderr, "bound check failed\n");
            return 1;
        }
        return 0;
    }

    if (app.got_subcommand(verify)) {
        int threads = 0;
        std::string err;
        if (!resolve_threads(threads_opt->count() > 0, verify_threads, threads, err))
            return usage_error(err.c_str());
        std::string echo = "verify --max-genus " + std::to_string(verify_max_genus) +
                           " --bounds " + verify_bounds + " --format " + verify_format;
        char* text = nullptr;
        char* counterexample = nullptr;
        int ok = 0;
        wilf_status st =
            wilf_report_verify(verify_max_genus, verify_bounds.c_str(), threads,
                               verify_format.c_str(), echo.c_str(), &text, &counterexample, &ok);
        if (st != WILF_OK)
            return api_error();
        print_report(text);
        wilf_string_free(text);
        if (!ok) {
            std::fprintf(stderr, "%s\n",
                         counterexample ? counterexample : "scan failed");
            wilf_string_free(counterexample);
            return 1;
        }
        wilf_string_free(counterexample);
        return 0;
    }

    if (app.got_subcommand(count)) {
        bool oracle_requested = oracle_opt->count() > 0;
        std::string echo = "count --max-genus " + std::to_string(count_max_genus);
        if (oracle_requested)
            echo += " --oracle-check " + std::to_string(count_oracle);
        echo += " --format " + count_format;
        char* text = nullptr;
        int ok = 0;
        wilf_status st =
            wilf_report_count(count_max_genus, oracle_requested ? count_oracle : -1,
                              count_format.c_str(), echo.c_str(), &text, &ok);
        if (st != WILF_OK)
            return api_error();
        print_report(text);
        wilf_string_free(text);
        if (oracle_requested) {
            if (!ok) {
                std::fprintf(stderr, "oracle mismatch\n");
                return 1;
            }
            std::fprintf(stderr, "oracle agrees\n");
        }
        return 0;
    }

    if (app.got_subcommand(extremal)) {
        std::string echo = "extremal --max-genus " + std::to_string(extremal_max_genus) +
                           " --metric " + extremal_metric + " --top " +
                           std::to_string(extremal_top) + " --format " + extremal_format;
        char* text = nullptr;
        wilf_status st =
            wilf_report_extremal(extremal_max_genus, extremal_metric.c_str(), extremal_top,
                                 extremal_format.c_str(), echo.c_str(), &text);
        if (st != WILF_OK)
            return api_error();
        print_report(text);
        wilf_string_free(text);
        return 0;
    }

    return usage_error("no subcommand given");
}
