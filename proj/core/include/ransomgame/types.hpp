#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ransomgame {

// Parameters of one group of identical organizations.  Losses F, L and T are
// the expected damages of a backup failure, a ransomware data loss and a
// service interruption; the realized per-organization cost of F and L scales
// with 1/b where b is the backup investment.
struct GroupParams {
    std::size_t size = 0;  ///< number of organizations in the group
    double wealth = 0.0;   ///< W, additive payoff base, never affects decisions
    double failure_loss = 1.0;       ///< F > 0
    double ransom_loss = 1.0;        ///< L > 0
    double interruption_loss = 0.0;  ///< T >= 0
};

struct GlobalParams {
    double discount = 1.0;         ///< beta in (0, 1]
    double base_difficulty = 1.0;  ///< D > 0, baseline attack resistance
    double backup_unit_cost = 1.0; ///< C_B > 0
    double attack_unit_cost = 1.0; ///< C_A > 0
    double dev_cost = 0.0;         ///< C_D >= 0, fixed cost of mounting a campaign
};

// Attacker's stage-I strategy: effort against each group and a single ransom
// demand.  A non-engaged attacker is encoded as all-zero.
struct AttackerStrategy {
    double effort_1 = 0.0;
    double effort_2 = 0.0;
    double ransom = 0.0;

    bool engaged() const { return effort_1 > 0.0 || effort_2 > 0.0; }
};

// Symmetric backup levels chosen inside each group.  Backups must be strictly
// positive: b = 0 makes the expected failure cost F/b unbounded.
struct DefenderProfile {
    double backup_1 = 1.0;
    double backup_2 = 1.0;

    double backup(std::size_t group) const { return group == 0 ? backup_1 : backup_2; }
    double& backup(std::size_t group) { return group == 0 ? backup_1 : backup_2; }
};

struct Profile {
    DefenderProfile defenders;
    AttackerStrategy attacker;
};

// Expected payoffs of a full profile: per-organization payoff for each group
// and the attacker's expected payoff.
struct PayoffReport {
    double org_payoff_1 = 0.0;
    double org_payoff_2 = 0.0;
    double attacker_payoff = 0.0;

    double org_payoff(std::size_t group) const { return group == 0 ? org_payoff_1 : org_payoff_2; }
};

// Thrown when a parameter or strategy violates its domain (e.g. b <= 0).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

void validate(const GroupParams& g, const std::string& label);
void validate(const GlobalParams& g);
void validate(const DefenderProfile& d);
void validate(const AttackerStrategy& a);

}  // namespace ransomgame
