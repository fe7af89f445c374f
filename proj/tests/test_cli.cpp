#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "charconj/multipoly.hpp"

namespace {

struct CmdResult {
    int status;
    std::string out;
};

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd =
        (env_prefix.empty() ? "" : env_prefix + " ") + std::string(CHARCONJ_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int rc = pclose(pipe);
    REQUIRE(WIFEXITED(rc));
    return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("character subcommands print exact values") {
    CHECK(run_cli("char --lambda 2,2 --nu 2,1,1").out == "0\n");
    CHECK(run_cli("char --lambda 3 --nu 3").out == "1\n");
    CHECK(run_cli("char --lambda 2,2 --nu 1,1,1,1").out == "2\n");
    CHECK(run_cli("char --lambda 2,2 --nu 2,1,1").status == 0);
    CHECK(run_cli("fhat --lambda 3,3 --mu 2").out == "6\n");
    CHECK(run_cli("fhat --lambda 4 --mu 4").out == "24\n");
}

TEST_CASE("polynomial subcommands render canonically") {
    CHECK(run_cli("gpoly --mu 1 --m 1").out == "p1*q1\n");
    CHECK(run_cli("gpoly --mu 2 --m 1 --signed").out == "-p1^2*q1 + p1*q1^2\n");
    CHECK(run_cli("gpoly --mu 2 --m 2 --signed").out ==
          "-p1^2*q1 - 2*p1*p2*q2 - p2^2*q2 + p1*q1^2 + p2*q2^2\n");
    CHECK(run_cli("fk --k 2 --m 1").out == "-p1^2*q1 + p1*q1^2\n");
    CHECK(run_cli("interp --mu 2 --m 1").out == "-p1^2*q1 + p1*q1^2\n");
}

TEST_CASE("JSON output round trips through the structured format") {
    const CmdResult text = run_cli("gpoly --mu 2,1 --m 2");
    const CmdResult json = run_cli("gpoly --mu 2,1 --m 2 --format json");
    REQUIRE(json.status == 0);
    const auto poly = charconj::MultiPoly::from_json(nlohmann::json::parse(json.out));
    CHECK(poly.to_string() + "\n" == text.out);
    CHECK(poly.to_json().dump(2) + "\n" == json.out);
}

TEST_CASE("verification campaigns report and exit cleanly") {
    const CmdResult r = run_cli("verify theorem1 --kmax 2 --dim 2");
    CHECK(r.status == 0);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(report.at("identity") == "theorem1");
    CHECK(report.at("pass") == true);
    CHECK(report.at("mismatches").empty());
    CHECK(report.at("elapsed_ms") == 0.0);  // deterministic output by default

    const CmdResult text = run_cli("verify oracles --nmax 3 --fmax 4 --format text");
    CHECK(text.status == 0);
    CHECK(text.out.rfind("PASS oracles", 0) == 0);

    CHECK(run_cli("verify reduction --mu 2,1 --m 2 --i 1").status == 0);
    CHECK(run_cli("verify prop1 --kmax 2 --mmax 2").status == 0);
}

TEST_CASE("identical invocations are byte-identical across worker counts") {
    const CmdResult one = run_cli("verify theorem1 --kmax 3 --dim 3 --threads 1");
    const CmdResult four = run_cli("verify theorem1 --kmax 3 --dim 3 --threads 4");
    const CmdResult env = run_cli("verify theorem1 --kmax 3 --dim 3", "CHARCONJ_THREADS=2");
    CHECK(one.status == 0);
    CHECK(one.out == four.out);
    CHECK(one.out == env.out);
}

TEST_CASE("usage and domain errors exit with status 1") {
    CHECK(run_cli("verify bogus").status == 1);
    CHECK(run_cli("gpoly --mu 2").status == 1);            // missing --m
    CHECK(run_cli("").status == 1);                        // subcommand required
    CHECK(run_cli("char --lambda 2,1 --nu 4").status == 1);  // size mismatch
    CHECK(run_cli("char --lambda 1,2 --nu 3").status == 1);  // not a partition
    CHECK(run_cli("verify reduction --mu 2 --m 2 --i 5").status == 1);
    CHECK(run_cli("interp --mu 3,2,1 --m 3").status == 1);  // grid guard
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("verify --help").status == 0);
}
