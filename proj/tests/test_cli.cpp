#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

#ifndef RANSOMGAME_CLI_PATH
#error "RANSOMGAME_CLI_PATH must point at the built executable"
#endif
#ifndef RANSOMGAME_CONFIG_DIR
#error "RANSOMGAME_CONFIG_DIR must point at the shipped configs"
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    const fs::path dir =
        fs::temp_directory_path() / ("ransomgame_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    const fs::path dir = scratch_dir();
    const fs::path out = dir / "out.txt";
    const fs::path err = dir / "err.txt";
    const std::string cmd = std::string(RANSOMGAME_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out);
    res.err = slurp(err);
    return res;
}

std::string baseline() { return std::string(RANSOMGAME_CONFIG_DIR) + "/baseline.cfg"; }

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve prints the equilibrium summary") {
    const RunResult res = run_cli("solve --config " + baseline());
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "state: cycle"));
    CHECK(contains(res.out, "b1: 2.292417044"));
    CHECK(contains(res.out, "attacker: engaged"));
}

TEST_CASE("solve emits machine-readable JSON on request") {
    const RunResult res = run_cli("solve --json --config " + baseline());
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["state"] == "cycle");
    CHECK(j["backups"][0].get<double>() == doctest::Approx(2.292417044000671).epsilon(1e-9));
    CHECK(j["attacker"]["engaged"] == true);
    CHECK(j["payoffs"]["attacker"].get<double>() ==
          doctest::Approx(13.341438898167159).epsilon(1e-9));
    CHECK(j["cycle"].size() == 2);
}

TEST_CASE("set overrides reach the solver") {
    const RunResult res = run_cli("solve --config " + baseline() + " --set C_B=0.3");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "state: deterred"));
    CHECK(contains(res.out, "attacker: abstains"));
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("").exit_code == 1);                                   // no subcommand
    CHECK(run_cli("solve").exit_code == 1);                              // missing --config
    CHECK(run_cli("solve --config x --bogus-flag").exit_code == 1);     // unknown flag
    CHECK(run_cli("frobnicate --config x").exit_code == 1);             // unknown command
}

TEST_CASE("configuration problems exit with code 2") {
    CHECK(run_cli("solve --config /nonexistent/nowhere.cfg").exit_code == 2);
    CHECK(run_cli("solve --config " + baseline() + " --set C_B=abc").exit_code == 2);
    CHECK(run_cli("solve --config " + baseline() + " --set C_B=-2").exit_code == 2);
    CHECK(run_cli("solve --config " + baseline() + " --set nope=1").exit_code == 2);
}

TEST_CASE("deterrence reports the no-attack backups and the verdict") {
    RunResult res = run_cli("deterrence --config " + baseline());
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "deterred: no"));
    CHECK(contains(res.out, "b1: 2.12132034356"));
    CHECK(contains(res.out, "attacker_deviation: a1="));

    res = run_cli("deterrence --config " + baseline() + " --set C_B=0.3");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "deterred: yes"));
    CHECK(contains(res.out, "attacker_deviation: none"));
}

TEST_CASE("social-optimum reports the planner profile") {
    const RunResult res = run_cli("social-optimum --config " + baseline());
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "attacker: abstains"));
    CHECK(contains(res.out, "aggregate_org_payoff: 9555.4"));
}

TEST_CASE("dynamics streams a CSV trace") {
    const RunResult res = run_cli("dynamics --config " + baseline());
    CHECK(res.exit_code == 0);
    CHECK(res.out.rfind("round,b1,b2,a1,a2,r\n", 0) == 0);
    CHECK(contains(res.out, "\n0,2.12132034356,"));
    CHECK(contains(res.err, "state: cycle"));
}

TEST_CASE("simulate reports means with standard errors") {
    const RunResult res =
        run_cli("simulate --config " + baseline() + " --samples 2000 --seed 3");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "samples: 2000"));
    CHECK(contains(res.out, "org1: mean="));
    CHECK(contains(res.out, "attacker: mean="));
    CHECK(contains(res.out, "analytic="));
}

TEST_CASE("sweep writes the requested CSV") {
    const fs::path dir = scratch_dir();
    const fs::path spec = dir / "small.spec";
    {
        std::ofstream f(spec);
        f << "axis1.param = C_B\naxis1.min = 0.3\naxis1.max = 1.0\naxis1.step = 0.35\n"
          << "outputs = C_B,NE_org_payoff,SO_org_payoff,NE_att_payoff,SO_att_payoff\n";
    }
    const fs::path csv = dir / "out.csv";
    const RunResult res = run_cli("sweep --config " + baseline() + " --spec " + spec.string() +
                                  " --out " + csv.string());
    CHECK(res.exit_code == 0);
    const std::string body = slurp(csv);
    CHECK(body.rfind("C_B,NE_org_payoff,SO_org_payoff,NE_att_payoff,SO_att_payoff\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 4);

    // Without --out the table goes to stdout instead.
    const RunResult out = run_cli("sweep --config " + baseline() + " --spec " + spec.string());
    CHECK(out.exit_code == 0);
    CHECK(out.out.rfind("C_B,NE_org_payoff", 0) == 0);

    const RunResult bad = run_cli("sweep --config " + baseline() + " --spec /nonexistent.spec");
    CHECK(bad.exit_code == 2);
}
