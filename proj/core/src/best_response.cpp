#include "ransomgame/best_response.hpp"

#include <cmath>
#include <limits>

namespace ransomgame {

double backup_no_attack(const GroupParams& grp, const GlobalParams& glob) {
    return std::sqrt(glob.discount * grp.failure_loss / glob.backup_unit_cost);
}

namespace {

// Expected payoff net of wealth at backup b, for fixed infection probability
// and ransom, with the stage-II payment induced by b itself.
double net_expected_at(const GroupParams& grp, const GlobalParams& glob, double infection,
                       double ransom, double b) {
    const bool pays = ransom <= grp.ransom_loss / b;
    const double data_loss = pays ? 0.0 : grp.ransom_loss;
    const double compromised = -glob.backup_unit_cost * b -
                               glob.discount * ((grp.failure_loss + data_loss) / b +
                                                grp.interruption_loss + (pays ? ransom : 0.0));
    const double clean = -glob.backup_unit_cost * b - glob.discount * grp.failure_loss / b;
    return (1.0 - infection) * clean + infection * compromised;
}

}  // namespace

BackupBestResponse backup_under_attack(const GroupParams& grp, const GlobalParams& glob,
                                       double infection, double ransom) {
    if (!(infection >= 0.0 && infection < 1.0))
        throw DomainError("infection probability must be in [0, 1)");
    if (!(ransom >= 0.0)) throw DomainError("ransom must be >= 0");

    BackupBestResponse out;
    out.low_candidate = backup_no_attack(grp, glob);
    out.high_candidate = std::sqrt(glob.discount *
                                   (grp.failure_loss + infection * grp.ransom_loss) /
                                   glob.backup_unit_cost);

    const double threshold =
        ransom > 0.0 ? grp.ransom_loss / ransom : std::numeric_limits<double>::infinity();
    if (out.low_candidate > threshold) {
        // Even the cheapest paying backup lies past the payment region: refuse.
        out.branch = BackupBranch::High;
        out.value = out.high_candidate;
    } else if (out.high_candidate < threshold) {
        // The refusal peak still sits inside the payment region: pay cheaply.
        out.branch = BackupBranch::Low;
        out.value = out.low_candidate;
    } else {
        const double pay_net = net_expected_at(grp, glob, infection, ransom, out.low_candidate);
        const double refuse_net =
            net_expected_at(grp, glob, infection, ransom, out.high_candidate);
        if (pay_net > refuse_net) {
            out.branch = BackupBranch::Low;
            out.value = out.low_candidate;
        } else {
            out.branch = BackupBranch::High;
            out.value = out.high_candidate;
        }
    }
    return out;
}

std::array<double, 2> ransom_candidates(const Groups& groups, const DefenderProfile& def) {
    validate(def);
    return {groups[0].ransom_loss / def.backup_1, groups[1].ransom_loss / def.backup_2};
}

namespace {

double paying_mass(const GroupParams& grp, double b, double ransom) {
    if (grp.size == 0) return 0.0;
    return ransom <= grp.ransom_loss / b ? static_cast<double>(grp.size) : 0.0;
}

}  // namespace

double ransom_best_response(const Groups& groups, const GlobalParams& glob,
                            const DefenderProfile& def, double effort_1, double effort_2) {
    if (!(effort_1 > 0.0 || effort_2 > 0.0))
        throw DomainError("ransom_best_response requires a positive effort");
    AttackerStrategy att{effort_1, effort_2, 0.0};
    const auto cands = ransom_candidates(groups, def);
    const double lo = std::min(cands[0], cands[1]);
    const double hi = std::max(cands[0], cands[1]);
    double best_r = lo, best_rev = -1.0;
    for (double r : {lo, hi}) {
        double revenue = 0.0;
        for (std::size_t j = 0; j < 2; ++j)
            revenue += paying_mass(groups[j], def.backup(j), r) *
                       infection_probability(j, glob, att) * r;
        if (revenue > best_rev) {  // strict: ties keep the smaller demand
            best_rev = revenue;
            best_r = r;
        }
    }
    return best_r;
}

double optimal_effort_scale(double paying_mass, double ransom, const GlobalParams& glob) {
    if (!(paying_mass >= 0.0) || !(ransom >= 0.0))
        throw DomainError("paying mass and ransom must be >= 0");
    const double gain = paying_mass * ransom;
    if (gain <= 0.0) return 0.0;
    const double a =
        std::sqrt(gain * glob.base_difficulty / glob.attack_unit_cost) - glob.base_difficulty;
    return a > 0.0 ? a : 0.0;
}

std::array<double, 2> effort_allocation(const Groups& groups, const GlobalParams& glob,
                                        const DefenderProfile& def, double effort_sum,
                                        double ransom) {
    if (!(effort_sum > 0.0)) throw DomainError("effort_sum must be > 0");
    const double m1 = paying_mass(groups[0], def.backup_1, ransom);
    const double m2 = paying_mass(groups[1], def.backup_2, ransom);
    const std::size_t target = m1 >= m2 ? 0 : 1;  // group 1 wins ties
    AttackerStrategy att;
    (target == 0 ? att.effort_1 : att.effort_2) = effort_sum;
    att.ransom = ransom;
    if (attacker_expected_payoff(groups, glob, def, att) <= 0.0) return {0.0, 0.0};
    return {att.effort_1, att.effort_2};
}

AttackerBestResponse attacker_best_response(const Groups& groups, const GlobalParams& glob,
                                            const DefenderProfile& def) {
    AttackerBestResponse best;  // abstention: payoff 0, all-zero strategy
    const auto cands = ransom_candidates(groups, def);
    const double lo = std::min(cands[0], cands[1]);
    const double hi = std::max(cands[0], cands[1]);
    for (double r : {lo, hi}) {
        const double m1 = paying_mass(groups[0], def.backup_1, r);
        const double m2 = paying_mass(groups[1], def.backup_2, r);
        const std::size_t target = m1 >= m2 ? 0 : 1;
        const double mass = std::max(m1, m2);
        const double a = optimal_effort_scale(mass, r, glob);
        if (a <= 0.0) continue;
        AttackerStrategy att;
        (target == 0 ? att.effort_1 : att.effort_2) = a;
        att.ransom = r;
        const double payoff = attacker_expected_payoff(groups, glob, def, att);
        if (payoff > best.payoff) {  // strict: ties keep the smaller ransom or stay out
            best.strategy = att;
            best.payoff = payoff;
            best.engaged = true;
        }
    }
    if (!best.engaged) best = AttackerBestResponse{};  // normalize the stay-out response
    return best;
}

}  // namespace ransomgame
