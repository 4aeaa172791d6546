#pragma once

#include <cstddef>
#include <cstdint>

#include "ransomgame/payoff.hpp"
#include "ransomgame/types.hpp"

namespace ransomgame {

struct SimulationConfig {
    std::size_t samples = 100000;
    std::uint64_t seed = 1;
};

// Monte Carlo estimate of the stage-II expectations at a fixed profile.
// Per-group means are per organization; a group of size zero reports 0 / 0.
struct SimulationResult {
    double mean_org_payoff_1 = 0.0;
    double mean_org_payoff_2 = 0.0;
    double mean_attacker_payoff = 0.0;
    double se_org_payoff_1 = 0.0;
    double se_org_payoff_2 = 0.0;
    double se_attacker_payoff = 0.0;
    std::size_t samples = 0;

    double mean_org(std::size_t group) const {
        return group == 0 ? mean_org_payoff_1 : mean_org_payoff_2;
    }
    double se_org(std::size_t group) const {
        return group == 0 ? se_org_payoff_1 : se_org_payoff_2;
    }
};

// Draws each organization's compromise independently with its group's
// infection probability; compromised organizations follow the stage-II
// payment rule.  Draws are keyed by (seed, sample, organization) through a
// counter-based generator, so results are independent of evaluation order
// and bit-identical for identical inputs.
SimulationResult simulate_stage2(const Groups& groups, const GlobalParams& glob,
                                 const DefenderProfile& def, const AttackerStrategy& att,
                                 const SimulationConfig& cfg);

}  // namespace ransomgame
