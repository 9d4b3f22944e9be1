#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    std::string output;
    int exit_code = -1;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string("'") + EQUIGEN_CLI_PATH + "' " + args + " 2>&1";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const char* rel) { return std::string(EQUIGEN_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("k3-trace golden output") {
    const CliResult r = run_cli("k3-trace --symplectic 2 --order 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1, 8, 52, 256\n");
    const CliResult identity = run_cli("k3-trace --symplectic 2 --order 3 --identity");
    CHECK(identity.output == "1, 24, 324, 3200\n");
    const CliResult ns = run_cli("k3-trace --nonsymplectic p=3,rankT=14 --order 3");
    CHECK(ns.exit_code == 0);
    CHECK(ns.output == "1, 3, 9, 29\n");
}

TEST_CASE("eta-verify golden output") {
    const CliResult r = run_cli("eta-verify --all-table-rows --order 20");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("8/8 rows equal\n") != std::string::npos);
    CHECK(r.output.find("N=7 quotient=1^3,7^3 weight=3 OK") != std::string::npos);
}

TEST_CASE("rh-search golden outputs") {
    const CliResult psl = run_cli("rh-search PSL27 --max-branch 4");
    CHECK(psl.exit_code == 0);
    CHECK(psl.output == "{2A,3A,7A} H1=χ2+χ3 genus=3\n");
    const CliResult a6 = run_cli("rh-search A6 --max-branch 4");
    CHECK(a6.output == "no solutions\n");
    const CliResult a5 = run_cli("rh-search A5 --max-branch 4");
    CHECK(a5.output ==
          "{2B,3A,5A} H1=0 genus=0\n"
          "{2B,5A,5A} H1=2χ4 genus=4\n");
    const CliResult s5 = run_cli("rh-search S5 --max-branch 4");
    CHECK(s5.output == "{2A,4A,5A} H1=2χ4 genus=4\n");
}

TEST_CASE("jacobian and family golden outputs") {
    const CliResult jac = run_cli("jacobian '" + data("curves/one_node_elliptic_z2.json") + "'");
    CHECK(jac.exit_code == 0);
    CHECK(jac.output ==
          "e(JbarC) = 2χ1-2χ2\n"
          "values = (0, 4)\n"
          "vanishing certificate: does not hold\n");
    const CliResult fam = run_cli("family '" + data("families/example3.json") + "'");
    CHECK(fam.exit_code == 0);
    CHECK(fam.output ==
          "e(JbarC_family) = 188χ1+136χ2\n"
          "values = (324, 52)\n");
}

TEST_CASE("orbit-solve golden outputs and exit codes") {
    const CliResult ok = run_cli("orbit-solve '" + data("orbit/example1_target.json") + "' '" +
                                 data("orbit/example1_basis.json") + "'");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output ==
          "(12, 2)\n"
          "regular_orbit = 12\n"
          "elliptic_rational_quotient = 2\n");
    const CliResult ex2 = run_cli("orbit-solve '" + data("orbit/example2_target.json") + "' '" +
                                  data("orbit/example2_basis.json") + "'");
    CHECK(ex2.exit_code == 0);
    CHECK(ex2.output.find("(8, 1)\n") == 0);
    // infeasible system: exit code 5
    const std::string tmp = "/tmp/equigen_test_target.json";
    {
        FILE* f = fopen(tmp.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("{\"group\": \"Z2\", \"values\": [\"1\", \"1\"]}\n", f);
        fclose(f);
    }
    const CliResult bad = run_cli("orbit-solve '" + tmp + "' '" + data("orbit/example1_basis.json") + "'");
    CHECK(bad.exit_code == 5);
    CHECK(bad.output.find("infeasible") != std::string::npos);
}

TEST_CASE("eta, induce, and series golden outputs") {
    const CliResult eta = run_cli("eta '1^-24' --order 4");
    CHECK(eta.exit_code == 0);
    CHECK(eta.output == "t^(-1) * 1, 24, 324, 3200, 25650\n");
    const CliResult eta2 = run_cli("eta '1^8,2^8' --order 2");
    CHECK(eta2.output == "t^(1) * 1, -8, 12\n");
    const CliResult ind = run_cli("induce A5 5A");
    CHECK(ind.output == "Ind_5A 1 = χ1+χ2+χ3+χ5  (dim 12)\n");
    const CliResult euler = run_cli("goettsche '" + data("surfaces/k3_trivial.json") +
                                    "' --order 2 --euler");
    CHECK(euler.output == "t^0: χ1\nt^1: 24χ1\nt^2: 324χ1\n");
    const CliResult mac = run_cli("macdonald '" + data("surfaces/genus2_trivial.json") +
                                  "' --order 1");
    CHECK(mac.output == "t^0: [d=0] χ1\nt^1: [d=0] χ1 [d=1] 4χ1 [d=2] χ1\n");
}

TEST_CASE("table subcommands") {
    const CliResult ok = run_cli("table verify PSL27");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "table PSL27: OK (order 168, 6 classes)\n");
    const CliResult show = run_cli("table show Z3");
    CHECK(show.exit_code == 0);
    CHECK(show.output.find("g0(size 1, ord 1)") != std::string::npos);
    CHECK(show.output.find("z@3") != std::string::npos);
}

TEST_CASE("error exit codes") {
    CHECK(run_cli("jacobian /nonexistent.json").exit_code == 3);     // schema
    CHECK(run_cli("table verify NOPE").exit_code == 4);              // precondition
    CHECK(run_cli("induce A5 9Z").exit_code == 4);                   // unknown class
}

TEST_CASE("outputs are byte-identical across runs") {
    const std::string cmds[] = {
        std::string("goettsche '") + data("surfaces/k3_z2_symplectic.json") + "' --order 4",
        std::string("rh-search S5 --max-branch 4"),
        std::string("macdonald '") + data("surfaces/genus2_trivial.json") + "' --order 4"};
    for (const std::string& cmd : cmds) {
        const CliResult a = run_cli(cmd);
        const CliResult b = run_cli(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("structured output parses as JSON") {
    const CliResult r = run_cli("--json induce PSL27 7A");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["display"] == "χ1+χ5+2χ6");
    CHECK(j["decomposition"].size() == 6);
    const CliResult table = run_cli("--json table show A5");
    const auto jt = nlohmann::json::parse(table.output);
    CHECK(jt["groupOrder"] == 60);
    const CliResult trace = run_cli("--json k3-trace --symplectic 6 --order 2");
    const auto js = nlohmann::json::parse(trace.output);
    CHECK(js["coefficients"][1] == "2");
}
