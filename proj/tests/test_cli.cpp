#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "nil2/report.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
};

std::string bin_path() {
    const char* p = std::getenv("NIL2_BIN");
    REQUIRE_MESSAGE(p != nullptr, "NIL2_BIN must point at the CLI binary");
    return p;
}

std::string golden_dir() {
    const char* p = std::getenv("NIL2_GOLDEN");
    REQUIRE_MESSAGE(p != nullptr, "NIL2_GOLDEN must point at the golden files");
    return p;
}

RunResult run_cli(const std::string& args) {
    std::string cmd = bin_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE_MESSAGE(f.good(), ("missing file " + path).c_str());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("homology human output") {
    RunResult r = run_cli("homology --dim-v 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("(2,2)") != std::string::npos);
    CHECK(r.out.find("diagram_dims_per_degree") != std::string::npos);
    CHECK(r.out.find("[pass]") != std::string::npos);
}

TEST_CASE("homology json matches the golden files") {
    for (int n = 1; n <= 3; ++n) {
        RunResult r = run_cli("homology --dim-v " + std::to_string(n) + " --json");
        REQUIRE(r.code == 0);
        nil2::RunReport fresh = nil2::run_report_from_json(r.out);
        nil2::RunReport golden = nil2::run_report_from_json(
            slurp(golden_dir() + "/homology_dim" + std::to_string(n) + ".json"));
        fresh.elapsed_ms = 0;  // timing excluded from the comparison
        golden.elapsed_ms = 0;
        CAPTURE(n);
        CAPTURE(r.out);
        CHECK(nil2::run_report_equal(fresh, golden));
    }
}

TEST_CASE("json round trips") {
    RunResult r = run_cli("verify --suite duality --dim-v 2 --json");
    REQUIRE(r.code == 0);
    nil2::RunReport parsed = nil2::run_report_from_json(r.out);
    CHECK(nil2::run_report_to_json(parsed) == r.out);
    CHECK(parsed.command == "verify");
    CHECK(parsed.params.at("suite") == "duality");
    CHECK(parsed.version == "1.0");
}

TEST_CASE("out file carries the same json") {
    std::string tmp = "cli_out_test.json";
    RunResult r = run_cli("homology --dim-v 1 --json --out " + tmp);
    REQUIRE(r.code == 0);
    CHECK(slurp(tmp) == r.out);
    std::remove(tmp.c_str());
}

TEST_CASE("transfer prints the pinned class") {
    RunResult r = run_cli("transfer --dim-v 3 --op m3 --args e1,e2,e3");
    CHECK(r.code == 0);
    CHECK(r.out.find("e{1,3}^e2") != std::string::npos);

    RunResult z = run_cli("transfer --dim-v 3 --op m2 --args e1,e2 --json");
    REQUIRE(z.code == 0);
    nil2::RunReport rep = nil2::run_report_from_json(z.out);
    REQUIRE(rep.body.tables.size() == 1);
    CHECK(rep.body.tables[0].rows[0] == std::vector<std::string>{"value", "0"});
    CHECK(rep.sign_variant == "(-1)^(u+1)");

    RunResult m = run_cli("transfer --dim-v 2 --op mn --arity 4 --args e1,e2,e1,e2 --json");
    REQUIRE(m.code == 0);
    nil2::RunReport mrep = nil2::run_report_from_json(m.out);
    CHECK(mrep.body.tables[0].rows[0] == std::vector<std::string>{"value", "0"});
}

TEST_CASE("parse failures list the valid generators") {
    RunResult r = run_cli("transfer --dim-v 2 --op m2 --args e9,e1");
    CHECK(r.code == 2);
    CHECK(r.out.find("valid generators: e1 e2 e{1,2}") != std::string::npos);

    RunResult a = run_cli("transfer --dim-v 2 --op m3 --args e1,e2");
    CHECK(a.code == 2);
}

TEST_CASE("exit codes follow the verdicts") {
    CHECK(run_cli("verify --suite duality --dim-v 3").code == 0);
    CHECK(run_cli("verify --suite retract --dim-v 2").code == 0);
    // the mixed-degree shuffle leg genuinely fails, and the exit code says so
    RunResult r = run_cli("verify --suite cinfty --dim-v 2");
    CHECK(r.code == 1);
    CHECK(r.out.find("[FAIL] shuffle_mixed_sampled") != std::string::npos);
    CHECK(r.out.find("residual") != std::string::npos);
}

TEST_CASE("cost guards ask for explicit intent") {
    CHECK(run_cli("homology --dim-v 6").code == 2);
    CHECK(run_cli("homology --dim-v 7 --force").code == 2);
    CHECK(run_cli("verify --suite stasheff --dim-v 2 --up-to 9").code == 2);
    CHECK(run_cli("littlewood --vars 0 --max-deg 3").code == 2);
}

TEST_CASE("littlewood subcommand") {
    RunResult r = run_cli("littlewood --vars 2 --max-deg 4 --expand");
    CHECK(r.code == 0);
    CHECK(r.out.find("[pass] littlewood") != std::string::npos);
    CHECK(r.out.find("x1^2*x2^2") != std::string::npos);
}
