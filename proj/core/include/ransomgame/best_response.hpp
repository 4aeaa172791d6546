#pragma once

#include <array>
#include <cstddef>

#include "ransomgame/payoff.hpp"
#include "ransomgame/types.hpp"

namespace ransomgame {

// Optimal backup when the group faces no attack: b* = sqrt(beta * F / C_B),
// the unconstrained maximizer of the not-compromised payoff.
double backup_no_attack(const GroupParams& grp, const GlobalParams& glob);

enum class BackupBranch { Low, High };

// Result of the under-attack backup choice.  low <= high always; value is one
// of the two.  Low pairs with paying the ransom, High with refusing it.
struct BackupBestResponse {
    double value = 0.0;
    BackupBranch branch = BackupBranch::Low;
    double low_candidate = 0.0;   ///< sqrt(beta * F / C_B)
    double high_candidate = 0.0;  ///< sqrt(beta * (F + V * L) / C_B)
};

// Optimal backup of an organization in a group attacked with infection
// probability V and ransom demand r.  The payoff is piecewise in b with a
// switch at b = L / r (pay below, refuse above); each piece has a closed-form
// peak.  When both peaks are admissible the better payoff wins, ties prefer
// the high branch.  r = 0 collapses to the no-attack optimum (low branch).
BackupBestResponse backup_under_attack(const GroupParams& grp, const GlobalParams& glob,
                                       double infection, double ransom);

// The two ransom levels worth considering: each group's payment threshold
// L_j / b_j.  Any other demand is dominated by one of these.
std::array<double, 2> ransom_candidates(const Groups& groups, const DefenderProfile& def);

// Revenue-maximizing ransom for fixed efforts.  Ties prefer the smaller
// demand (more victims pay).  Requires at least one positive effort.
double ransom_best_response(const Groups& groups, const GlobalParams& glob,
                            const DefenderProfile& def, double effort_1, double effort_2);

// Splits a fixed effort budget across groups: everything goes to the group
// with the larger paying mass m_j = size_j * [r <= L_j / b_j] (group 1 on
// ties).  Returns (0, 0) when the resulting attacker payoff is not positive.
std::array<double, 2> effort_allocation(const Groups& groups, const GlobalParams& glob,
                                        const DefenderProfile& def, double effort_sum,
                                        double ransom);

// Optimal total effort against a paying mass m at ransom r:
//   a* = max(0, sqrt(m * r * D / C_A) - D)
double optimal_effort_scale(double paying_mass, double ransom, const GlobalParams& glob);

struct AttackerBestResponse {
    AttackerStrategy strategy;  // all-zero when the attacker stays out
    double payoff = 0.0;        // 0 when not engaged
    bool engaged = false;
};

// Global attacker best response to a defender profile: for each candidate
// ransom, concentrate effort on the group with the larger paying mass and
// scale it optimally; engage only if the best payoff is strictly positive.
// Ties across candidates prefer the smaller ransom.
AttackerBestResponse attacker_best_response(const Groups& groups, const GlobalParams& glob,
                                            const DefenderProfile& def);

}  // namespace ransomgame
