#include "ransomgame/payoff.hpp"

#include <cmath>

namespace ransomgame {

double infection_probability(std::size_t group, const GlobalParams& glob,
                             const AttackerStrategy& att) {
    const double effort = group == 0 ? att.effort_1 : att.effort_2;
    return effort / (glob.base_difficulty + att.effort_1 + att.effort_2);
}

namespace {

void require_backup(double b) {
    if (!(b > 0.0)) throw DomainError("backup level must be > 0");
}

// Not-compromised payoff without the wealth term: -C_B * b - beta * F / b.
double net_not_compromised(const GroupParams& grp, const GlobalParams& glob, double b) {
    return -glob.backup_unit_cost * b - glob.discount * grp.failure_loss / b;
}

// Compromised payoff without the wealth term.
double net_compromised(const GroupParams& grp, const GlobalParams& glob, double b, bool pays,
                       double ransom) {
    const double data_loss = pays ? 0.0 : grp.ransom_loss;
    return -glob.backup_unit_cost * b -
           glob.discount * ((grp.failure_loss + data_loss) / b + grp.interruption_loss +
                            (pays ? ransom : 0.0));
}

}  // namespace

double org_payoff_not_compromised(const GroupParams& grp, const GlobalParams& glob, double b) {
    require_backup(b);
    return grp.wealth + net_not_compromised(grp, glob, b);
}

double org_payoff_compromised(const GroupParams& grp, const GlobalParams& glob, double b,
                              bool pays, double ransom) {
    require_backup(b);
    return grp.wealth + net_compromised(grp, glob, b, pays, ransom);
}

bool payment_best_response(const GroupParams& grp, double b, double ransom) {
    require_backup(b);
    // Paying costs r, refusing costs L / b; indifference resolves to paying.
    return ransom <= grp.ransom_loss / b;
}

double org_expected_payoff_net(std::size_t group, const Groups& groups, const GlobalParams& glob,
                               const DefenderProfile& def, const AttackerStrategy& att) {
    const GroupParams& grp = groups[group];
    const double b = def.backup(group);
    require_backup(b);
    const double v = infection_probability(group, glob, att);
    const bool pays = payment_best_response(grp, b, att.ransom);
    return (1.0 - v) * net_not_compromised(grp, glob, b) +
           v * net_compromised(grp, glob, b, pays, att.ransom);
}

double org_expected_payoff(std::size_t group, const Groups& groups, const GlobalParams& glob,
                           const DefenderProfile& def, const AttackerStrategy& att) {
    return groups[group].wealth + org_expected_payoff_net(group, groups, glob, def, att);
}

double attacker_expected_payoff(const Groups& groups, const GlobalParams& glob,
                                const DefenderProfile& def, const AttackerStrategy& att) {
    if (!att.engaged()) return 0.0;
    double revenue = 0.0;
    for (std::size_t j = 0; j < 2; ++j) {
        if (groups[j].size == 0) continue;
        const double b = def.backup(j);
        require_backup(b);
        if (!payment_best_response(groups[j], b, att.ransom)) continue;
        revenue += static_cast<double>(groups[j].size) * infection_probability(j, glob, att) *
                   att.ransom;
    }
    return revenue - glob.attack_unit_cost * (att.effort_1 + att.effort_2) - glob.dev_cost;
}

PayoffReport make_payoff_report(const Groups& groups, const GlobalParams& glob,
                                const DefenderProfile& def, const AttackerStrategy& att) {
    PayoffReport r;
    // An empty group has nobody to earn a payoff; report 0 so analytic and
    // simulated reports agree.
    r.org_payoff_1 = groups[0].size ? org_expected_payoff(0, groups, glob, def, att) : 0.0;
    r.org_payoff_2 = groups[1].size ? org_expected_payoff(1, groups, glob, def, att) : 0.0;
    r.attacker_payoff = attacker_expected_payoff(groups, glob, def, att);
    return r;
}

}  // namespace ransomgame
