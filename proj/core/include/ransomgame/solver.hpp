#pragma once

#include <cstddef>
#include <vector>

#include "ransomgame/best_response.hpp"
#include "ransomgame/payoff.hpp"
#include "ransomgame/types.hpp"

namespace ransomgame {

struct SolverOptions {
    double verify_tolerance = 1e-9;  ///< relative payoff slack in verify_profile
    double cycle_tolerance = 1e-6;   ///< relative profile distance for cycle detection
    std::size_t max_iterations = 1000;
    double damping = 0.5;            ///< step fraction for candidate fixed-point solving
    // Social-optimum search: log-spaced grid over [so_min, so_max]^2 followed
    // by coordinate refinement down to so_refine_tol relative resolution.
    std::size_t so_grid = 200;
    double so_min = 0.01;
    double so_max = 100.0;
    double so_refine_tol = 1e-5;
};

enum class SolveKind {
    DeterredEquilibrium,  // attacker stays out at the no-attack backups
    ExactEquilibrium,     // verified mutual best responses
    AveragedTwoCycle,     // best-response dynamics settled into a 2-cycle
    NotFound,
};

const char* to_string(SolveKind kind);

struct SolveOutcome {
    SolveKind kind = SolveKind::NotFound;
    DefenderProfile defenders;
    AttackerStrategy attacker;
    PayoffReport report;
    std::size_t iterations = 0;
    // The two endpoints of the detected cycle (empty unless AveragedTwoCycle).
    // Each pairs a defender profile with the attacker's best response to it;
    // the stored profile/report above are their component-wise means.
    std::vector<Profile> cycle;
};

// True iff every strategy is within tolerance of its best-response payoff:
// each attacked (resp. unattacked) group matches the under-attack (resp.
// no-attack) optimum and the attacker matches its global best response.
// Stage-II payments are the threshold rule by construction everywhere.
bool verify_profile(const Groups& groups, const GlobalParams& glob, const DefenderProfile& def,
                    const AttackerStrategy& att, double tolerance = 1e-9);

struct DeterrenceCheck {
    bool deterred = false;
    DefenderProfile no_attack_backups;
    AttackerBestResponse best_deviation;  // attacker's best entry against those backups
};

// The profile where every group plays its no-attack backup is an equilibrium
// exactly when the attacker's best response to it stays out.
DeterrenceCheck check_deterrence(const Groups& groups, const GlobalParams& glob);

struct DynamicsResult {
    SolveOutcome outcome;
    std::vector<Profile> trace;  // profile after each full round, including the start
};

// Iterated best responses, attacker first then defenders each round.  Stops
// on a fixed point (exact equilibrium) or when the profile repeats the one
// from two rounds earlier (2-cycle, averaged into the outcome).  Gives up
// with NotFound after opts.max_iterations rounds.
DynamicsResult best_response_dynamics(const Groups& groups, const GlobalParams& glob,
                                      const Profile& start, const SolverOptions& opts = {});

// Subgame-perfect solution search: deterrence check, then closed-form
// candidate profiles (branch assignment x ransom candidate, damped fixed
// point, each verified), then dynamics as fallback.
SolveOutcome find_equilibrium(const Groups& groups, const GlobalParams& glob,
                              const SolverOptions& opts = {});

struct SocialOptimum {
    DefenderProfile defenders;
    AttackerStrategy attacker;  // best response to the coordinated backups
    double aggregate_org_payoff = 0.0;
    PayoffReport report;
};

// Coordinated backups maximizing total organization payoff, with the attacker
// free to best-respond.  Payments stay individually rational (threshold
// rule).  The objective is discontinuous where the attacker enters or leaves,
// hence grid search plus local refinement rather than smooth optimization.
// Known-good defender profiles (e.g. an equilibrium) may be passed as extra
// starting candidates; they can only improve the found optimum.
SocialOptimum social_optimum(const Groups& groups, const GlobalParams& glob,
                             const SolverOptions& opts = {},
                             const std::vector<DefenderProfile>& extra_candidates = {});

}  // namespace ransomgame
