#pragma once

#include <array>
#include <cstddef>

#include "ransomgame/types.hpp"

namespace ransomgame {

using Groups = std::array<GroupParams, 2>;

// V_j = a_j / (D + a_1 + a_2).  Always in [0, 1); V_1 + V_2 < 1.
double infection_probability(std::size_t group, const GlobalParams& glob,
                             const AttackerStrategy& att);

// Payoff of an organization that was not compromised:
//   W - C_B * b - beta * F / b
double org_payoff_not_compromised(const GroupParams& grp, const GlobalParams& glob, double b);

// Payoff of a compromised organization, given its pay/not-pay decision:
//   W - C_B * b - beta * ((F + (1 - p) * L) / b + T + p * r)
double org_payoff_compromised(const GroupParams& grp, const GlobalParams& glob, double b,
                              bool pays, double ransom);

// Stage-II best response of a compromised organization: pay exactly when
// r <= L / b (indifference resolves to paying).
bool payment_best_response(const GroupParams& grp, double b, double ransom);

// Expected payoff of one organization, weighting the compromised branch by
// its group's infection probability.  The payment decision is the stage-II
// best response above.
double org_expected_payoff(std::size_t group, const Groups& groups, const GlobalParams& glob,
                           const DefenderProfile& def, const AttackerStrategy& att);

// Same value with the wealth term W removed.  All best-response comparisons
// go through this form so that W can never influence a decision.
double org_expected_payoff_net(std::size_t group, const Groups& groups, const GlobalParams& glob,
                               const DefenderProfile& def, const AttackerStrategy& att);

// Attacker's expected payoff: ransom revenue from paying victims minus effort
// and campaign costs.  Exactly zero when the attacker is not engaged.
double attacker_expected_payoff(const Groups& groups, const GlobalParams& glob,
                                const DefenderProfile& def, const AttackerStrategy& att);

PayoffReport make_payoff_report(const Groups& groups, const GlobalParams& glob,
                                const DefenderProfile& def, const AttackerStrategy& att);

}  // namespace ransomgame
