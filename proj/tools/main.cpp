// Command line front end for the ransomware game library.
//
// Subcommands: solve, social-optimum, deterrence, dynamics, simulate, sweep.
// Exit codes: 0 success, 1 usage error, 2 bad config or I/O, 3 no equilibrium.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ransomgame/config.hpp"
#include "ransomgame/simulate.hpp"
#include "ransomgame/solver.hpp"
#include "ransomgame/sweep.hpp"

namespace {

using namespace ransomgame;

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::optional<double> tolerance;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("-c,--config", args.config_path, "scenario config file")->required();
    cmd->add_option("-s,--set", args.sets, "override a config entry, key=value (repeatable)");
    cmd->add_option("--tolerance", args.tolerance, "equilibrium verification tolerance");
    cmd->add_flag("-q,--quiet", args.quiet, "suppress diagnostics on stderr");
}

ScenarioConfig load_scenario(const CommonArgs& args) {
    ScenarioConfig cfg = load_config(args.config_path);
    for (const std::string& kv : args.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError(ConfigError::Kind::Parse, "--set expects key=value, got: " + kv);
        apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (args.tolerance) cfg.solver.verify_tolerance = *args.tolerance;
    validate_config(cfg);
    return cfg;
}

std::string fmt(double v) { return format_cell(v); }

void print_profile_lines(const DefenderProfile& def, const AttackerStrategy& att,
                         const PayoffReport& report) {
    std::cout << "b1: " << fmt(def.backup_1) << "\n";
    std::cout << "b2: " << fmt(def.backup_2) << "\n";
    if (att.engaged()) {
        std::cout << "attacker: engaged a1=" << fmt(att.effort_1)
                  << " a2=" << fmt(att.effort_2) << " r=" << fmt(att.ransom) << "\n";
    } else {
        std::cout << "attacker: abstains\n";
    }
    std::cout << "org1_payoff: " << fmt(report.org_payoff_1) << "\n";
    std::cout << "org2_payoff: " << fmt(report.org_payoff_2) << "\n";
    std::cout << "attacker_payoff: " << fmt(report.attacker_payoff) << "\n";
}

nlohmann::json profile_json(const Profile& p) {
    return {{"b1", p.defenders.backup_1},
            {"b2", p.defenders.backup_2},
            {"a1", p.attacker.effort_1},
            {"a2", p.attacker.effort_2},
            {"r", p.attacker.ransom}};
}

int cmd_solve(const CommonArgs& args, bool as_json) {
    const ScenarioConfig cfg = load_scenario(args);
    const SolveOutcome out = find_equilibrium(cfg.groups, cfg.globals, cfg.solver);
    if (as_json) {
        nlohmann::json j{
            {"state", to_string(out.kind)},
            {"backups", {out.defenders.backup_1, out.defenders.backup_2}},
            {"attacker",
             {{"effort_1", out.attacker.effort_1},
              {"effort_2", out.attacker.effort_2},
              {"ransom", out.attacker.ransom},
              {"engaged", out.attacker.engaged()}}},
            {"payoffs",
             {{"org_1", out.report.org_payoff_1},
              {"org_2", out.report.org_payoff_2},
              {"attacker", out.report.attacker_payoff}}},
            {"iterations", out.iterations}};
        if (!out.cycle.empty()) {
            nlohmann::json cyc = nlohmann::json::array();
            for (const Profile& p : out.cycle) cyc.push_back(profile_json(p));
            j["cycle"] = cyc;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "state: " << to_string(out.kind) << "\n";
        print_profile_lines(out.defenders, out.attacker, out.report);
        std::cout << "iterations: " << out.iterations << "\n";
    }
    if (out.kind == SolveKind::NotFound) {
        if (!args.quiet) std::cerr << "no equilibrium found within iteration budget\n";
        return 3;
    }
    return 0;
}

int cmd_social_optimum(const CommonArgs& args) {
    const ScenarioConfig cfg = load_scenario(args);
    // Seed the planner with the equilibrium defenders so it never reports a
    // plan the organisations already beat on their own.
    const SolveOutcome ne = find_equilibrium(cfg.groups, cfg.globals, cfg.solver);
    std::vector<DefenderProfile> seeds{ne.defenders};
    for (const Profile& p : ne.cycle) seeds.push_back(p.defenders);
    const SocialOptimum so = social_optimum(cfg.groups, cfg.globals, cfg.solver, seeds);
    print_profile_lines(so.defenders, so.attacker, so.report);
    std::cout << "aggregate_org_payoff: " << fmt(so.aggregate_org_payoff) << "\n";
    return 0;
}

int cmd_deterrence(const CommonArgs& args) {
    const ScenarioConfig cfg = load_scenario(args);
    const DeterrenceCheck check = check_deterrence(cfg.groups, cfg.globals);
    std::cout << "deterred: " << (check.deterred ? "yes" : "no") << "\n";
    std::cout << "b1: " << fmt(check.no_attack_backups.backup_1) << "\n";
    std::cout << "b2: " << fmt(check.no_attack_backups.backup_2) << "\n";
    if (check.best_deviation.engaged) {
        const AttackerStrategy& s = check.best_deviation.strategy;
        std::cout << "attacker_deviation: a1=" << fmt(s.effort_1) << " a2=" << fmt(s.effort_2)
                  << " r=" << fmt(s.ransom) << " payoff=" << fmt(check.best_deviation.payoff)
                  << "\n";
    } else {
        std::cout << "attacker_deviation: none\n";
    }
    return 0;
}

int cmd_dynamics(const CommonArgs& args, std::optional<double> b1, std::optional<double> b2) {
    const ScenarioConfig cfg = load_scenario(args);
    Profile start;
    start.defenders = check_deterrence(cfg.groups, cfg.globals).no_attack_backups;
    if (b1) start.defenders.backup_1 = *b1;
    if (b2) start.defenders.backup_2 = *b2;
    start.attacker = {};
    const DynamicsResult res = best_response_dynamics(cfg.groups, cfg.globals, start, cfg.solver);
    std::cout << "round,b1,b2,a1,a2,r\n";
    for (std::size_t i = 0; i < res.trace.size(); ++i) {
        const Profile& p = res.trace[i];
        std::cout << i << ',' << fmt(p.defenders.backup_1) << ',' << fmt(p.defenders.backup_2)
                  << ',' << fmt(p.attacker.effort_1) << ',' << fmt(p.attacker.effort_2) << ','
                  << fmt(p.attacker.ransom) << "\n";
    }
    if (!args.quiet)
        std::cerr << "state: " << to_string(res.outcome.kind) << " after "
                  << res.outcome.iterations << " rounds\n";
    return res.outcome.kind == SolveKind::NotFound ? 3 : 0;
}

int cmd_simulate(const CommonArgs& args, std::size_t samples, std::uint64_t seed) {
    const ScenarioConfig cfg = load_scenario(args);
    const SolveOutcome out = find_equilibrium(cfg.groups, cfg.globals, cfg.solver);
    if (out.kind == SolveKind::NotFound)
        throw ConfigError(ConfigError::Kind::Validation,
                          "cannot simulate: no equilibrium found for this scenario");
    SimulationConfig sim_cfg;
    sim_cfg.samples = samples;
    sim_cfg.seed = seed;
    const SimulationResult sim =
        simulate_stage2(cfg.groups, cfg.globals, out.defenders, out.attacker, sim_cfg);
    const PayoffReport analytic =
        make_payoff_report(cfg.groups, cfg.globals, out.defenders, out.attacker);
    std::cout << "state: " << to_string(out.kind) << "\n";
    std::cout << "samples: " << sim.samples << "\n";
    std::cout << "seed: " << seed << "\n";
    std::cout << "org1: mean=" << fmt(sim.mean_org_payoff_1) << " se=" << fmt(sim.se_org_payoff_1)
              << " analytic=" << fmt(analytic.org_payoff_1) << "\n";
    std::cout << "org2: mean=" << fmt(sim.mean_org_payoff_2) << " se=" << fmt(sim.se_org_payoff_2)
              << " analytic=" << fmt(analytic.org_payoff_2) << "\n";
    std::cout << "attacker: mean=" << fmt(sim.mean_attacker_payoff)
              << " se=" << fmt(sim.se_attacker_payoff)
              << " analytic=" << fmt(analytic.attacker_payoff) << "\n";
    return 0;
}

int cmd_sweep(const CommonArgs& args, const std::string& spec_path, const std::string& out_path) {
    const ScenarioConfig cfg = load_scenario(args);
    const SweepSpec spec = load_sweep_spec(spec_path);
    const SweepTable table = run_sweep(cfg, spec);
    if (out_path.empty()) {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            std::cout << (c ? "," : "") << table.columns[c];
        std::cout << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "," : "") << row[c];
            std::cout << "\n";
        }
    } else {
        write_csv(table, out_path);
        if (!args.quiet)
            std::cerr << "wrote " << table.rows.size() << " rows to " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-stage ransomware security game solver"};
    app.require_subcommand(1);

    CommonArgs common;

    CLI::App* solve = app.add_subcommand("solve", "find the stage-1 equilibrium");
    bool solve_json = false;
    add_common(solve, common);
    solve->add_flag("--json", solve_json, "emit the outcome as JSON");

    CLI::App* social = app.add_subcommand("social-optimum", "planner-chosen backups");
    add_common(social, common);

    CLI::App* deterrence = app.add_subcommand("deterrence", "check whether backups deter attack");
    add_common(deterrence, common);

    CLI::App* dynamics = app.add_subcommand("dynamics", "best response iteration trace as CSV");
    std::optional<double> dyn_b1, dyn_b2;
    add_common(dynamics, common);
    dynamics->add_option("--b1", dyn_b1, "starting backup for group 1");
    dynamics->add_option("--b2", dyn_b2, "starting backup for group 2");

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo check of stage-2 payoffs");
    std::size_t samples = 100000;
    std::uint64_t seed = 1;
    add_common(simulate, common);
    simulate->add_option("--samples", samples, "number of Monte Carlo samples");
    simulate->add_option("--seed", seed, "random seed");

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep, CSV output");
    std::string spec_path, out_path;
    add_common(sweep, common);
    sweep->add_option("--spec", spec_path, "sweep spec file")->required();
    sweep->add_option("-o,--out", out_path, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(solve)) return cmd_solve(common, solve_json);
        if (app.got_subcommand(social)) return cmd_social_optimum(common);
        if (app.got_subcommand(deterrence)) return cmd_deterrence(common);
        if (app.got_subcommand(dynamics)) return cmd_dynamics(common, dyn_b1, dyn_b2);
        if (app.got_subcommand(simulate)) return cmd_simulate(common, samples, seed);
        if (app.got_subcommand(sweep)) return cmd_sweep(common, spec_path, out_path);
    } catch (const ransomgame::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ransomgame::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
