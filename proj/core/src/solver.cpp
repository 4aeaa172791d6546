#include "ransomgame/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ransomgame {

const char* to_string(SolveKind kind) {
    switch (kind) {
        case SolveKind::DeterredEquilibrium: return "deterred";
        case SolveKind::ExactEquilibrium: return "exact";
        case SolveKind::AveragedTwoCycle: return "cycle";
        case SolveKind::NotFound: return "not_found";
    }
    return "not_found";
}

namespace {

bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool profiles_close(const Profile& x, const Profile& y, double tol) {
    return close(x.defenders.backup_1, y.defenders.backup_1, tol) &&
           close(x.defenders.backup_2, y.defenders.backup_2, tol) &&
           close(x.attacker.effort_1, y.attacker.effort_1, tol) &&
           close(x.attacker.effort_2, y.attacker.effort_2, tol) &&
           close(x.attacker.ransom, y.attacker.ransom, tol);
}

DefenderProfile no_attack_profile(const Groups& groups, const GlobalParams& glob) {
    DefenderProfile d;
    d.backup_1 = backup_no_attack(groups[0], glob);
    d.backup_2 = backup_no_attack(groups[1], glob);
    return d;
}

// One defender round: every attacked group re-optimizes against the current
// attacker, every spared group falls back to the no-attack optimum.
DefenderProfile defender_best_response(const Groups& groups, const GlobalParams& glob,
                                       const AttackerStrategy& att) {
    DefenderProfile d;
    for (std::size_t j = 0; j < 2; ++j) {
        const double effort = j == 0 ? att.effort_1 : att.effort_2;
        if (effort > 0.0) {
            const double v = infection_probability(j, glob, att);
            d.backup(j) = backup_under_attack(groups[j], glob, v, att.ransom).value;
        } else {
            d.backup(j) = backup_no_attack(groups[j], glob);
        }
    }
    return d;
}

Profile mean_profile(const Profile& a, const Profile& b) {
    Profile m;
    m.defenders.backup_1 = 0.5 * (a.defenders.backup_1 + b.defenders.backup_1);
    m.defenders.backup_2 = 0.5 * (a.defenders.backup_2 + b.defenders.backup_2);
    m.attacker.effort_1 = 0.5 * (a.attacker.effort_1 + b.attacker.effort_1);
    m.attacker.effort_2 = 0.5 * (a.attacker.effort_2 + b.attacker.effort_2);
    m.attacker.ransom = 0.5 * (a.attacker.ransom + b.attacker.ransom);
    return m;
}

PayoffReport mean_report(const PayoffReport& a, const PayoffReport& b) {
    PayoffReport m;
    m.org_payoff_1 = 0.5 * (a.org_payoff_1 + b.org_payoff_1);
    m.org_payoff_2 = 0.5 * (a.org_payoff_2 + b.org_payoff_2);
    m.attacker_payoff = 0.5 * (a.attacker_payoff + b.attacker_payoff);
    return m;
}

}  // namespace

bool verify_profile(const Groups& groups, const GlobalParams& glob, const DefenderProfile& def,
                    const AttackerStrategy& att, double tolerance) {
    validate(def);
    validate(att);
    // Wealth-free payoffs throughout, so the check is invariant to W.
    for (std::size_t j = 0; j < 2; ++j) {
        if (groups[j].size == 0) continue;
        const double effort = j == 0 ? att.effort_1 : att.effort_2;
        double opt_b;
        if (effort > 0.0) {
            const double v = infection_probability(j, glob, att);
            opt_b = backup_under_attack(groups[j], glob, v, att.ransom).value;
        } else {
            opt_b = backup_no_attack(groups[j], glob);
        }
        DefenderProfile dev = def;
        dev.backup(j) = opt_b;
        const double best = org_expected_payoff_net(j, groups, glob, dev, att);
        const double cur = org_expected_payoff_net(j, groups, glob, def, att);
        if (cur < best - tolerance * std::max(1.0, std::abs(best))) return false;
    }
    const AttackerBestResponse abr = attacker_best_response(groups, glob, def);
    const double cur = attacker_expected_payoff(groups, glob, def, att);
    return cur >= abr.payoff - tolerance * std::max(1.0, std::abs(abr.payoff));
}

DeterrenceCheck check_deterrence(const Groups& groups, const GlobalParams& glob) {
    DeterrenceCheck out;
    out.no_attack_backups = no_attack_profile(groups, glob);
    out.best_deviation = attacker_best_response(groups, glob, out.no_attack_backups);
    out.deterred = !out.best_deviation.engaged;
    return out;
}

DynamicsResult best_response_dynamics(const Groups& groups, const GlobalParams& glob,
                                      const Profile& start, const SolverOptions& opts) {
    validate(start.defenders);
    validate(start.attacker);
    DynamicsResult res;
    res.trace.push_back(start);
    for (std::size_t round = 1; round <= opts.max_iterations; ++round) {
        const Profile& cur = res.trace.back();
        Profile next;
        next.attacker = attacker_best_response(groups, glob, cur.defenders).strategy;
        next.defenders = defender_best_response(groups, glob, next.attacker);
        res.trace.push_back(next);

        if (profiles_close(next, cur, opts.cycle_tolerance)) {
            res.outcome.kind = SolveKind::ExactEquilibrium;
            res.outcome.defenders = next.defenders;
            res.outcome.attacker = next.attacker;
            res.outcome.report = make_payoff_report(groups, glob, next.defenders, next.attacker);
            res.outcome.iterations = round;
            return res;
        }
        if (round >= 2 && profiles_close(next, res.trace[res.trace.size() - 3],
                                         opts.cycle_tolerance)) {
            // 2-cycle: report both endpoints with the attacker re-optimized
            // against each defender profile, store their component-wise mean.
            const Profile& other = res.trace[res.trace.size() - 2];
            Profile p1{other.defenders,
                       attacker_best_response(groups, glob, other.defenders).strategy};
            Profile p2{next.defenders,
                       attacker_best_response(groups, glob, next.defenders).strategy};
            const Profile mean = mean_profile(p1, p2);
            res.outcome.kind = SolveKind::AveragedTwoCycle;
            res.outcome.defenders = mean.defenders;
            res.outcome.attacker = mean.attacker;
            res.outcome.report =
                mean_report(make_payoff_report(groups, glob, p1.defenders, p1.attacker),
                            make_payoff_report(groups, glob, p2.defenders, p2.attacker));
            res.outcome.iterations = round;
            res.outcome.cycle = {p1, p2};
            return res;
        }
    }
    const Profile& last = res.trace.back();
    res.outcome.kind = SolveKind::NotFound;
    res.outcome.defenders = last.defenders;
    res.outcome.attacker = last.attacker;
    res.outcome.report = make_payoff_report(groups, glob, last.defenders, last.attacker);
    res.outcome.iterations = opts.max_iterations;
    return res;
}

namespace {

// Damped fixed-point solve for one structural candidate: the attacked group
// commits to the given backup branch, the ransom is pinned to one group's
// payment threshold.  Returns the converged profile (attacker re-derived at
// the final backups).
Profile solve_candidate(const Groups& groups, const GlobalParams& glob, std::size_t ransom_group,
                        BackupBranch branch_1, BackupBranch branch_2,
                        const SolverOptions& opts) {
    const std::array<BackupBranch, 2> branch{branch_1, branch_2};
    DefenderProfile def = no_attack_profile(groups, glob);

    auto respond = [&](const DefenderProfile& d) {
        AttackerStrategy att;
        att.ransom = groups[ransom_group].ransom_loss / d.backup(ransom_group);
        const double m1 = groups[0].size && att.ransom <= groups[0].ransom_loss / d.backup_1
                              ? static_cast<double>(groups[0].size)
                              : 0.0;
        const double m2 = groups[1].size && att.ransom <= groups[1].ransom_loss / d.backup_2
                              ? static_cast<double>(groups[1].size)
                              : 0.0;
        const std::size_t target = m1 >= m2 ? 0 : 1;
        const double a = optimal_effort_scale(std::max(m1, m2), att.ransom, glob);
        (target == 0 ? att.effort_1 : att.effort_2) = a;
        if (a <= 0.0 || attacker_expected_payoff(groups, glob, d, att) <= 0.0)
            return AttackerStrategy{};
        return att;
    };

    AttackerStrategy att;
    for (std::size_t it = 0; it < 500; ++it) {
        att = respond(def);
        DefenderProfile next;
        bool settled = true;
        for (std::size_t j = 0; j < 2; ++j) {
            const double effort = j == 0 ? att.effort_1 : att.effort_2;
            if (effort > 0.0) {
                const double v = infection_probability(j, glob, att);
                const auto bb = backup_under_attack(groups[j], glob, v, att.ransom);
                next.backup(j) =
                    branch[j] == BackupBranch::Low ? bb.low_candidate : bb.high_candidate;
            } else {
                next.backup(j) = backup_no_attack(groups[j], glob);
            }
            if (!close(next.backup(j), def.backup(j), 1e-13)) settled = false;
            def.backup(j) += opts.damping * (next.backup(j) - def.backup(j));
        }
        if (settled) break;
    }
    return Profile{def, respond(def)};
}

}  // namespace

SolveOutcome find_equilibrium(const Groups& groups, const GlobalParams& glob,
                              const SolverOptions& opts) {
    validate(groups[0], "group1");
    validate(groups[1], "group2");
    validate(glob);

    const DeterrenceCheck det = check_deterrence(groups, glob);
    if (det.deterred) {
        SolveOutcome out;
        out.kind = SolveKind::DeterredEquilibrium;
        out.defenders = det.no_attack_backups;
        out.attacker = AttackerStrategy{};
        out.report = make_payoff_report(groups, glob, out.defenders, out.attacker);
        out.iterations = 0;
        return out;
    }

    for (std::size_t ransom_group = 0; ransom_group < 2; ++ransom_group) {
        for (BackupBranch b1 : {BackupBranch::Low, BackupBranch::High}) {
            for (BackupBranch b2 : {BackupBranch::Low, BackupBranch::High}) {
                const Profile cand = solve_candidate(groups, glob, ransom_group, b1, b2, opts);
                if (!cand.attacker.engaged()) continue;  // collapsed to deterrence: rejected above
                if (verify_profile(groups, glob, cand.defenders, cand.attacker,
                                   opts.verify_tolerance)) {
                    SolveOutcome out;
                    out.kind = SolveKind::ExactEquilibrium;
                    out.defenders = cand.defenders;
                    out.attacker = cand.attacker;
                    out.report = make_payoff_report(groups, glob, cand.defenders, cand.attacker);
                    return out;
                }
            }
        }
    }

    Profile start{det.no_attack_backups, AttackerStrategy{}};
    return best_response_dynamics(groups, glob, start, opts).outcome;
}

namespace {

double so_net_aggregate(const Groups& groups, const GlobalParams& glob,
                        const DefenderProfile& def) {
    const AttackerStrategy att = attacker_best_response(groups, glob, def).strategy;
    double total = 0.0;
    for (std::size_t j = 0; j < 2; ++j) {
        if (groups[j].size == 0) continue;
        total += static_cast<double>(groups[j].size) *
                 org_expected_payoff_net(j, groups, glob, def, att);
    }
    return total;
}

}  // namespace

SocialOptimum social_optimum(const Groups& groups, const GlobalParams& glob,
                             const SolverOptions& opts,
                             const std::vector<DefenderProfile>& extra_candidates) {
    validate(groups[0], "group1");
    validate(groups[1], "group2");
    validate(glob);

    const DefenderProfile rest = no_attack_profile(groups, glob);
    DefenderProfile best = rest;
    double best_val = so_net_aggregate(groups, glob, best);

    auto consider = [&](const DefenderProfile& d) {
        if (!(d.backup_1 > 0.0 && d.backup_2 > 0.0)) return;
        const double val = so_net_aggregate(groups, glob, d);
        if (val > best_val) {
            best_val = val;
            best = d;
        }
    };

    // Coarse log grid.  A group without organizations contributes nothing and
    // keeps its no-attack backup instead of an axis.
    const std::size_t n = std::max<std::size_t>(opts.so_grid, 2);
    const double ratio = std::pow(opts.so_max / opts.so_min, 1.0 / static_cast<double>(n - 1));
    auto grid_value = [&](std::size_t i) {
        return opts.so_min * std::pow(ratio, static_cast<double>(i));
    };
    const bool live_1 = groups[0].size > 0;
    const bool live_2 = groups[1].size > 0;
    const std::size_t n1 = live_1 ? n : 1;
    const std::size_t n2 = live_2 ? n : 1;
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t k = 0; k < n2; ++k) {
            DefenderProfile d;
            d.backup_1 = live_1 ? grid_value(i) : rest.backup_1;
            d.backup_2 = live_2 ? grid_value(k) : rest.backup_2;
            consider(d);
        }
    }
    for (const DefenderProfile& d : extra_candidates) consider(d);

    // Coordinate refinement: halve the log-bracket around the incumbent until
    // the grid resolution reaches the requested relative tolerance.
    double span = ratio;  // multiplicative half-width of the local bracket
    while (span - 1.0 > opts.so_refine_tol) {
        for (std::size_t axis = 0; axis < 2; ++axis) {
            if (axis == 0 && !live_1) continue;
            if (axis == 1 && !live_2) continue;
            const double center = axis == 0 ? best.backup_1 : best.backup_2;
            const double lo = std::max(opts.so_min, center / span);
            const double hi = std::min(opts.so_max, center * span);
            const std::size_t pts = 21;
            for (std::size_t i = 0; i < pts; ++i) {
                const double x =
                    lo * std::pow(hi / lo, static_cast<double>(i) / (pts - 1));
                DefenderProfile d = best;
                (axis == 0 ? d.backup_1 : d.backup_2) = x;
                consider(d);
            }
        }
        span = std::sqrt(span);
    }

    SocialOptimum out;
    out.defenders = best;
    out.attacker = attacker_best_response(groups, glob, best).strategy;
    out.report = make_payoff_report(groups, glob, out.defenders, out.attacker);
    out.aggregate_org_payoff = static_cast<double>(groups[0].size) * out.report.org_payoff_1 +
                               static_cast<double>(groups[1].size) * out.report.org_payoff_2;
    return out;
}

}  // namespace ransomgame
