#include "ransomgame/simulate.hpp"

#include <cmath>
#include <vector>

namespace ransomgame {

namespace {

// splitmix64 finalizer; used as a stateless hash so every (seed, sample,
// organization) triple gets an independent draw regardless of loop order.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline double to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;  // [0, 1)
}

// Welford's running moments.  A constant stream yields its value and a zero
// standard error exactly, so degenerate cases (no attack, one sample) come
// out bit-clean.
struct Accumulator {
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t n = 0;
    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    double stderr_() const {
        if (n < 2) return 0.0;
        const double var = std::max(0.0, m2 / static_cast<double>(n - 1));
        return std::sqrt(var / static_cast<double>(n));
    }
};

}  // namespace

SimulationResult simulate_stage2(const Groups& groups, const GlobalParams& glob,
                                 const DefenderProfile& def, const AttackerStrategy& att,
                                 const SimulationConfig& cfg) {
    validate(def);
    validate(att);
    if (cfg.samples == 0) throw DomainError("samples must be >= 1");

    struct GroupCtx {
        std::size_t size = 0;
        double infection = 0.0;
        bool pays = false;
        double clean_net = 0.0;        // payoff net of wealth, not compromised
        double compromised_net = 0.0;  // payoff net of wealth, compromised
    };
    std::array<GroupCtx, 2> ctx;
    for (std::size_t j = 0; j < 2; ++j) {
        ctx[j].size = groups[j].size;
        if (groups[j].size == 0) continue;
        ctx[j].infection = infection_probability(j, glob, att);
        ctx[j].pays = payment_best_response(groups[j], def.backup(j), att.ransom);
        // Sample wealth-free payoffs and shift by W once at the end: the
        // draws, and hence the standard errors, are bit-invariant under W.
        GroupParams no_wealth = groups[j];
        no_wealth.wealth = 0.0;
        ctx[j].clean_net = org_payoff_not_compromised(no_wealth, glob, def.backup(j));
        ctx[j].compromised_net =
            org_payoff_compromised(no_wealth, glob, def.backup(j), ctx[j].pays, att.ransom);
    }
    const double fixed_cost =
        att.engaged() ? glob.attack_unit_cost * (att.effort_1 + att.effort_2) + glob.dev_cost
                      : 0.0;

    // Stable per-organization stream keys (group 1 first, then group 2).
    std::vector<std::uint64_t> org_key;
    org_key.reserve(ctx[0].size + ctx[1].size);
    for (std::size_t i = 0; i < ctx[0].size + ctx[1].size; ++i)
        org_key.push_back(mix64(0xA076'1D64'78BD'642FULL + i));

    const std::uint64_t base = mix64(cfg.seed);
    Accumulator org1, org2, attacker;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        const std::uint64_t sample_key = mix64(base ^ (0x632B'E59B'D9B4'E019ULL + s));
        std::size_t offset = 0;
        double revenue = 0.0;
        for (std::size_t j = 0; j < 2; ++j) {
            if (ctx[j].size == 0) continue;
            std::size_t compromised = 0;
            for (std::size_t i = 0; i < ctx[j].size; ++i)
                if (to_unit(mix64(sample_key ^ org_key[offset + i])) < ctx[j].infection)
                    ++compromised;
            offset += ctx[j].size;
            const double group_mean =
                (static_cast<double>(ctx[j].size - compromised) * ctx[j].clean_net +
                 static_cast<double>(compromised) * ctx[j].compromised_net) /
                static_cast<double>(ctx[j].size);
            (j == 0 ? org1 : org2).add(group_mean);
            if (ctx[j].pays) revenue += static_cast<double>(compromised) * att.ransom;
        }
        attacker.add(att.engaged() ? revenue - fixed_cost : 0.0);
    }

    SimulationResult res;
    res.samples = cfg.samples;
    if (ctx[0].size > 0) {
        res.mean_org_payoff_1 = groups[0].wealth + org1.mean;
        res.se_org_payoff_1 = org1.stderr_();
    }
    if (ctx[1].size > 0) {
        res.mean_org_payoff_2 = groups[1].wealth + org2.mean;
        res.se_org_payoff_2 = org2.stderr_();
    }
    res.mean_attacker_payoff = attacker.mean;
    res.se_attacker_payoff = attacker.stderr_();
    return res;
}

}  // namespace ransomgame
