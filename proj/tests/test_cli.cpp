// Copyright (c) Wilf toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests for the wilf binary (path in $WILF_CLI). Each case runs
// the real executable through the shell and checks stdout, stderr, and the
// exit code.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs `wilf <args>` under the shell. `env_prefix` may carry variable
// assignments ("WILF_THREADS=4 "); WILF_THREADS is cleared by default so
// the ambient test environment cannot leak in.
RunResult run(const std::string& args, const std::string& env_prefix = "WILF_THREADS= ") {
    static int seq = 0;
    const char* bin = std::getenv("WILF_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "WILF_CLI must point at the built binary");
    std::string base =
        "/tmp/wilf_cli_" + std::to_string(getpid()) + "_" + std::to_string(seq++);
    std::string cmd = env_prefix + "\"" + bin + "\" " + args + " > " + base + ".out 2> " +
                      base + ".err";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(base + ".out");
    r.err = slurp(base + ".err");
    std::remove((base + ".out").c_str());
    std::remove((base + ".err").c_str());
    return r;
}

json parse_stdout(const RunResult& r) {
    return json::parse(r.out);
}

} // namespace

TEST_CASE("help and usage errors") {
    RunResult help = run("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("inspect") != std::string::npos);
    CHECK(help.out.find("verify") != std::string::npos);
    CHECK(help.out.find("extremal") != std::string::npos);

    RunResult bare = run("");
    CHECK(bare.exit_code == 2);
    CHECK(bare.err.rfind("error: ", 0) == 0);

    RunResult missing = run("verify");
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.rfind("error: ", 0) == 0);
}

TEST_CASE("inspect: json document and exit 0") {
    RunResult r = run("inspect 3,5,7");
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.empty());
    json doc = parse_stdout(r);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["command"] == "inspect 3,5,7 --format json");
    CHECK(doc["payload"]["semigroup"]["frobenius"] == 4);
    CHECK(doc["payload"]["semigroup"]["genus"] == 3);
    CHECK(doc["payload"]["all_hold"] == true);

    // Same invocation, same bytes.
    RunResult again = run("inspect 3,5,7");
    CHECK(again.out == r.out);
}

TEST_CASE("inspect: csv") {
    RunResult r = run("inspect 2,3 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out ==
          "genus,atom_list,f,g,e,m,d_num,d_den"
          ",wilf_slack_num,wilf_slack_den,wilf_holds"
          ",zhai_slack_num,zhai_slack_den,zhai_holds"
          ",lemma3_slack_num,lemma3_slack_den,lemma3_holds"
          ",two_star_slack_num,two_star_slack_den,two_star_holds"
          ",three_star_slack_num,three_star_slack_den,three_star_holds"
          ",prop_a_slack_num,prop_a_slack_den,prop_a_holds"
          ",prop_b_slack_num,prop_b_slack_den,prop_b_holds\n"
          "1,\"2,3\",1,1,2,2,1,2,0,1,1,0,1,1,0,1,1,0,1,1,0,1,1,,,,0,1,1\n");
}

TEST_CASE("inspect: input errors exit 2") {
    RunResult gcd = run("inspect 4,6");
    CHECK(gcd.exit_code == 2);
    CHECK(gcd.out.empty());
    CHECK(gcd.err == "error: gcd of generators is 2\n");

    RunResult full = run("inspect 1");
    CHECK(full.exit_code == 2);
    CHECK(full.err == "error: S = N has no Frobenius number\n");

    RunResult mangled = run("inspect 3,,7");
    CHECK(mangled.exit_code == 2);
    CHECK(mangled.err == "error: generators must be a comma-separated list of integers\n");

    RunResult fmt = run("inspect 3,5,7 --format xml");
    CHECK(fmt.exit_code == 2);
    CHECK(fmt.err == "error: unknown format: xml (expected json or csv)\n");
}

TEST_CASE("verify: clean scan exits 0 with the frozen aggregates") {
    RunResult r = run("verify --max-genus 5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.empty());
    json doc = parse_stdout(r);
    CHECK(doc["command"] == "verify --max-genus 5 --bounds all --format json");
    CHECK(doc["payload"]["semigroups_checked"] == 26);
    CHECK(doc["payload"]["counts_per_genus"] == json::array({1, 1, 2, 4, 7, 12}));
    CHECK(doc["payload"]["all_hold"] == true);
    CHECK(doc["payload"]["counterexamples"] == json::array());
}

TEST_CASE("verify: csv rows for a subset of bounds") {
    RunResult r = run("verify --max-genus 3 --bounds wilf --format csv");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line ==
          "genus,atom_list,f,g,e,m,d_num,d_den,wilf_slack_num,wilf_slack_den,wilf_holds");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "1,\"2,3\",1,1,2,2,1,2,0,1,1");
    int rows = 1;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 7); // semigroups with 1 <= genus <= 3
}

TEST_CASE("verify: argument errors exit 2") {
    RunResult zero = run("verify --max-genus 0");
    CHECK(zero.exit_code == 2);
    CHECK(zero.err == "error: genus bound must be >= 1\n");

    RunResult bounds = run("verify --max-genus 3 --bounds wilf,nope");
    CHECK(bounds.exit_code == 2);
    CHECK(bounds.err == "error: unknown bound name: nope\n");
}

TEST_CASE("verify: payload is identical for any thread count") {
    json first;
    bool have_first = false;
    for (const char* args : {"verify --max-genus 8 --threads 1",
                             "verify --max-genus 8 --threads 4",
                             "verify --max-genus 8 --threads 8"}) {
        RunResult r = run(args);
        REQUIRE(r.exit_code == 0);
        json doc = parse_stdout(r);
        // The command echo never mentions threads, so whole documents agree
        // once timing is set aside.
        doc["payload"].erase("wall_time_ms");
        if (!have_first) {
            first = doc;
            have_first = true;
        } else {
            CHECK(doc == first);
        }
    }
}

TEST_CASE("verify: WILF_THREADS env is honored and the flag wins") {
    RunResult env_run = run("verify --max-genus 6", "WILF_THREADS=3 ");
    REQUIRE(env_run.exit_code == 0);
    json env_doc = parse_stdout(env_run);
    CHECK(env_doc["payload"]["semigroups_checked"] == 49);

    RunResult bad = run("verify --max-genus 3", "WILF_THREADS=abc ");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err == "error: invalid WILF_THREADS value: abc\n");

    RunResult zero = run("verify --max-genus 3", "WILF_THREADS=0 ");
    CHECK(zero.exit_code == 2);
    CHECK(zero.err == "error: invalid WILF_THREADS value: 0\n");

    // An explicit flag shields the run from a broken environment.
    RunResult flag = run("verify --max-genus 3 --threads 2", "WILF_THREADS=abc ");
    CHECK(flag.exit_code == 0);
}

TEST_CASE("count: oracle agreement goes to stderr, data to stdout") {
    RunResult r = run("count --max-genus 6 --oracle-check 6");
    REQUIRE(r.exit_code == 0);
    CHECK(r.err == "oracle agrees\n");
    json doc = parse_stdout(r);
    CHECK(doc["command"] == "count --max-genus 6 --oracle-check 6 --format json");
    CHECK(doc["payload"]["total"] == 50);
    CHECK(doc["payload"]["oracle"]["agrees"] == true);

    RunResult plain = run("count --max-genus 4");
    REQUIRE(plain.exit_code == 0);
    CHECK(plain.err.empty());
    json pd = parse_stdout(plain);
    CHECK(pd["payload"]["counts"] == json::array({1, 1, 2, 4, 7}));
    CHECK(!pd["payload"].contains("oracle"));

    RunResult over = run("count --max-genus 4 --oracle-check 6");
    CHECK(over.exit_code == 2);
    CHECK(over.err == "error: oracle check range exceeds --max-genus\n");
}

TEST_CASE("count: csv") {
    RunResult r = run("count --max-genus 3 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "genus,count\n0,1\n1,1\n2,2\n3,4\n");
}

TEST_CASE("extremal: ranked table") {
    RunResult r = run("extremal --max-genus 6 --metric wilf --top 3");
    REQUIRE(r.exit_code == 0);
    json doc = parse_stdout(r);
    CHECK(doc["command"] == "extremal --max-genus 6 --metric wilf --top 3 --format json");
    REQUIRE(doc["payload"]["entries"].size() == 3);
    CHECK(doc["payload"]["entries"][0]["atoms"] == json::array({2, 3}));
    CHECK(doc["payload"]["entries"][0]["slack"]["num"] == 0);

    RunResult csv = run("extremal --max-genus 6 --metric wilf --top 3 --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out ==
          "rank,atom_list,genus,f,e,m,d_num,d_den,slack_num,slack_den,is_equality\n"
          "1,\"2,3\",1,1,2,2,1,2,0,1,1\n"
          "2,\"2,5\",2,3,2,2,1,2,0,1,1\n"
          "3,\"2,7\",3,5,2,2,1,2,0,1,1\n");

    RunResult bogus = run("extremal --max-genus 6 --metric bogus --top 3");
    CHECK(bogus.exit_code == 2);
    CHECK(bogus.err == "error: unknown metric: bogus\n");

    RunResult zero = run("extremal --max-genus 6 --metric wilf --top 0");
    CHECK(zero.exit_code == 2);
    CHECK(zero.err == "error: top-k must be >= 1\n");
}
