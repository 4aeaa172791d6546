#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "ransomgame/solver.hpp"

using namespace ransomgame;

namespace {

GlobalParams baseline_globals() {
    GlobalParams g;
    g.discount = 0.9;
    g.base_difficulty = 10.0;
    g.backup_unit_cost = 1.0;
    g.attack_unit_cost = 10.0;
    g.dev_cost = 10.0;
    return g;
}

Groups baseline_groups() {
    Groups gs{GroupParams{100, 100.0, 5.0, 5.0, 10.0}, GroupParams{}};
    gs[1].size = 0;
    return gs;
}

}  // namespace

TEST_CASE("cheap backups deter the attacker outright") {
    const Groups gs = baseline_groups();
    GlobalParams glob = baseline_globals();
    glob.backup_unit_cost = 0.3;

    const DeterrenceCheck check = check_deterrence(gs, glob);
    CHECK(check.deterred);
    CHECK(check.no_attack_backups.backup_1 == doctest::Approx(3.872983346207417).epsilon(1e-12));

    const SolveOutcome out = find_equilibrium(gs, glob);
    CHECK(out.kind == SolveKind::DeterredEquilibrium);
    CHECK_FALSE(out.attacker.engaged());
    CHECK(out.report.org_payoff_1 == doctest::Approx(97.67620999227555).epsilon(1e-10));
    CHECK(out.report.attacker_payoff == 0.0);
    CHECK(verify_profile(gs, glob, out.defenders, out.attacker));
}

TEST_CASE("baseline resolves to the averaged two-cycle") {
    const Groups gs = baseline_groups();
    const GlobalParams glob = baseline_globals();

    const SolveOutcome out = find_equilibrium(gs, glob);
    CHECK(out.kind == SolveKind::AveragedTwoCycle);
    CHECK(out.defenders.backup_1 == doctest::Approx(2.292417044000671).epsilon(1e-9));
    CHECK(out.attacker.effort_1 == doctest::Approx(4.799537846883531).epsilon(1e-9));
    CHECK(out.attacker.effort_2 == 0.0);
    CHECK(out.attacker.ransom == doctest::Approx(2.1933219583583776).epsilon(1e-9));
    CHECK(out.report.org_payoff_1 == doctest::Approx(92.18133732865606).epsilon(1e-9));
    CHECK(out.report.attacker_payoff == doctest::Approx(13.341438898167159).epsilon(1e-9));

    REQUIRE(out.cycle.size() == 2);
    double lo = out.cycle[0].defenders.backup_1;
    double hi = out.cycle[1].defenders.backup_1;
    if (lo > hi) std::swap(lo, hi);
    CHECK(lo == doctest::Approx(2.1213203435596424).epsilon(1e-9));
    CHECK(hi == doctest::Approx(2.4635137444416997).epsilon(1e-9));
}

TEST_CASE("equilibrium kind flips across the deterrence boundary in backup cost") {
    const Groups gs = baseline_groups();
    GlobalParams glob = baseline_globals();

    glob.backup_unit_cost = 0.4;
    CHECK(find_equilibrium(gs, glob).kind == SolveKind::DeterredEquilibrium);
    glob.backup_unit_cost = 0.6;
    CHECK(find_equilibrium(gs, glob).kind == SolveKind::AveragedTwoCycle);
}

TEST_CASE("deterrence check agrees with the solver") {
    const Groups gs = baseline_groups();
    for (double cb : {0.2, 0.4, 0.6, 1.0, 1.5}) {
        GlobalParams glob = baseline_globals();
        glob.backup_unit_cost = cb;
        const bool deterred = check_deterrence(gs, glob).deterred;
        const SolveOutcome out = find_equilibrium(gs, glob);
        CHECK(deterred == (out.kind == SolveKind::DeterredEquilibrium));
    }
}

TEST_CASE("strategies are invariant to wealth shifts") {
    Groups gs = baseline_groups();
    const GlobalParams glob = baseline_globals();

    const SolveOutcome base = find_equilibrium(gs, glob);
    gs[0].wealth = 0.0;
    const SolveOutcome shifted = find_equilibrium(gs, glob);

    CHECK(base.kind == shifted.kind);
    CHECK(base.defenders.backup_1 == shifted.defenders.backup_1);  // bit identical
    CHECK(base.defenders.backup_2 == shifted.defenders.backup_2);
    CHECK(base.attacker.effort_1 == shifted.attacker.effort_1);
    CHECK(base.attacker.ransom == shifted.attacker.ransom);
    CHECK(base.report.attacker_payoff == shifted.report.attacker_payoff);
    CHECK(base.report.org_payoff_1 - shifted.report.org_payoff_1 ==
          doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("dynamics reach the same averaged outcome from any start") {
    const Groups gs = baseline_groups();
    const GlobalParams glob = baseline_globals();

    std::mt19937_64 rng(5150u);
    std::uniform_real_distribution<double> u(std::log(0.05), std::log(20.0));
    for (int i = 0; i < 10; ++i) {
        Profile start;
        start.defenders = {std::exp(u(rng)), 1.0};
        start.attacker = {};
        const DynamicsResult res = best_response_dynamics(gs, glob, start);
        CHECK(res.outcome.kind == SolveKind::AveragedTwoCycle);
        CHECK(res.outcome.defenders.backup_1 ==
              doctest::Approx(2.292417044000671).epsilon(1e-6));
        CHECK(res.outcome.attacker.ransom ==
              doctest::Approx(2.1933219583583776).epsilon(1e-6));
        CHECK(res.trace.size() >= 2);
    }
}

TEST_CASE("dynamics settle immediately in a deterred scenario") {
    const Groups gs = baseline_groups();
    GlobalParams glob = baseline_globals();
    glob.backup_unit_cost = 0.3;

    Profile start;
    start.defenders = check_deterrence(gs, glob).no_attack_backups;
    start.attacker = {};
    const DynamicsResult res = best_response_dynamics(gs, glob, start);
    CHECK(res.outcome.kind == SolveKind::ExactEquilibrium);
    CHECK(res.outcome.iterations <= 2);
    CHECK_FALSE(res.outcome.attacker.engaged());
}

TEST_CASE("verify rejects profiles with profitable deviations") {
    const Groups gs = baseline_groups();
    const GlobalParams glob = baseline_globals();
    // Underinvested defender facing the attacker's best response to it.
    const DefenderProfile def{1.0, 1.0};
    const AttackerStrategy att = attacker_best_response(gs, glob, def).strategy;
    CHECK_FALSE(verify_profile(gs, glob, def, att));
}

TEST_CASE("planner deters at baseline and beats the equilibrium") {
    const Groups gs = baseline_groups();
    const GlobalParams glob = baseline_globals();

    const SolveOutcome ne = find_equilibrium(gs, glob);
    const SocialOptimum so = social_optimum(gs, glob, {}, {ne.defenders});
    CHECK_FALSE(so.attacker.engaged());
    CHECK(so.defenders.backup_1 == doctest::Approx(2.8860769627550873).epsilon(1e-3));
    CHECK(so.report.org_payoff_1 == doctest::Approx(95.5547130584146).epsilon(1e-4));
    CHECK(so.report.org_payoff_1 > ne.report.org_payoff_1);
    CHECK(so.aggregate_org_payoff ==
          doctest::Approx(100.0 * so.report.org_payoff_1).epsilon(1e-12));
}

TEST_CASE("planner keeps deterring where the worked example expects engagement") {
    // At twice the baseline backup cost the deterrence plan still dominates
    // any engaged plan, so the planner continues to deter.
    const Groups gs = baseline_groups();
    GlobalParams glob = baseline_globals();
    glob.backup_unit_cost = 2.0;

    const SolveOutcome ne = find_equilibrium(gs, glob);
    const SocialOptimum so = social_optimum(gs, glob, {}, {ne.defenders});
    CHECK_FALSE(so.attacker.engaged());
    CHECK(so.aggregate_org_payoff >= 100.0 * ne.report.org_payoff_1 - 1e-6);
}

TEST_CASE("planner coincides with equilibrium when attacks are hopeless") {
    const Groups gs = baseline_groups();
    GlobalParams glob = baseline_globals();
    glob.attack_unit_cost = 30.0;

    const SolveOutcome ne = find_equilibrium(gs, glob);
    CHECK(ne.kind == SolveKind::DeterredEquilibrium);
    const SocialOptimum so = social_optimum(gs, glob, {}, {ne.defenders});
    CHECK(so.defenders.backup_1 == doctest::Approx(ne.defenders.backup_1).epsilon(1e-12));
    CHECK(so.aggregate_org_payoff ==
          doctest::Approx(100.0 * ne.report.org_payoff_1).epsilon(1e-10));
}

TEST_CASE("planner is wealth invariant too") {
    Groups gs = baseline_groups();
    const GlobalParams glob = baseline_globals();
    const SocialOptimum a = social_optimum(gs, glob);
    gs[0].wealth = 0.0;
    const SocialOptimum b = social_optimum(gs, glob);
    CHECK(a.defenders.backup_1 == b.defenders.backup_1);  // bit identical
    CHECK(a.defenders.backup_2 == b.defenders.backup_2);
}

TEST_CASE("splitting the population halves the paying mass and deters the attacker") {
    // Two groups of 50 are individually too small to attack at these losses,
    // even though one group of 100 would not be.
    Groups gs{GroupParams{50, 100.0, 5.0, 5.0, 10.0}, GroupParams{50, 100.0, 5.0, 5.0, 10.0}};
    const GlobalParams glob = baseline_globals();

    const SolveOutcome out = find_equilibrium(gs, glob);
    CHECK(out.kind == SolveKind::DeterredEquilibrium);
    CHECK(out.defenders.backup_1 == doctest::Approx(2.1213203435596424).epsilon(1e-12));
    CHECK(out.defenders.backup_2 == doctest::Approx(2.1213203435596424).epsilon(1e-12));
}

TEST_CASE("symmetric engaged scenario cycles between the two targets") {
    Groups gs{GroupParams{50, 100.0, 5.0, 10.0, 10.0}, GroupParams{50, 100.0, 5.0, 10.0, 10.0}};
    const GlobalParams glob = baseline_globals();

    const SolveOutcome out = find_equilibrium(gs, glob);
    CHECK(out.kind == SolveKind::AveragedTwoCycle);
    // The attacker alternates targets, so the averaged profile is symmetric.
    CHECK(out.defenders.backup_1 == doctest::Approx(2.442488665).epsilon(1e-8));
    CHECK(out.defenders.backup_2 == doctest::Approx(out.defenders.backup_1).epsilon(1e-12));
    CHECK(out.attacker.effort_1 == doctest::Approx(2.676298919).epsilon(1e-8));
    CHECK(out.attacker.effort_2 == doctest::Approx(out.attacker.effort_1).epsilon(1e-12));
    CHECK(out.attacker.ransom == doctest::Approx(4.714045207910317).epsilon(1e-9));
    CHECK(out.report.org_payoff_1 == doctest::Approx(93.37422599453143).epsilon(1e-8));
    CHECK(out.report.org_payoff_2 == doctest::Approx(out.report.org_payoff_1).epsilon(1e-10));
    CHECK(out.report.attacker_payoff == doctest::Approx(18.650303622374864).epsilon(1e-8));
}
