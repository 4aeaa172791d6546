#include "ransomgame/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace ransomgame {

std::vector<double> SweepAxis::values() const {
    std::vector<double> out;
    if (count > 0) {
        if (count == 1) return {min};
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(min + (max - min) * static_cast<double>(i) /
                                    static_cast<double>(count - 1));
        return out;
    }
    // Values are min + i*step, never a running sum; the end point is included
    // up to a small relative slack.
    const auto n = static_cast<std::size_t>(
        std::floor((max - min) / step + 1.0 + 1e-9));
    for (std::size_t i = 0; i < n; ++i) out.push_back(min + static_cast<double>(i) * step);
    return out;
}

namespace {

const char* const kAxisParams[] = {"C_B", "C_A", "beta", "D",  "C_D", "L1", "L2", "F1",
                                   "F2",  "T1",  "T2",   "W1", "W2",  "G1", "G2"};

bool known_axis_param(const std::string& name) {
    for (const char* p : kAxisParams)
        if (name == p) return true;
    return false;
}

void set_param(ScenarioConfig& cfg, const std::string& name, double value) {
    if (name == "C_B") cfg.globals.backup_unit_cost = value;
    else if (name == "C_A") cfg.globals.attack_unit_cost = value;
    else if (name == "beta") cfg.globals.discount = value;
    else if (name == "D") cfg.globals.base_difficulty = value;
    else if (name == "C_D") cfg.globals.dev_cost = value;
    else if (name == "W1") cfg.groups[0].wealth = value;
    else if (name == "W2") cfg.groups[1].wealth = value;
    else if (name == "F1") cfg.groups[0].failure_loss = value;
    else if (name == "F2") cfg.groups[1].failure_loss = value;
    else if (name == "L1") cfg.groups[0].ransom_loss = value;
    else if (name == "L2") cfg.groups[1].ransom_loss = value;
    else if (name == "T1") cfg.groups[0].interruption_loss = value;
    else if (name == "T2") cfg.groups[1].interruption_loss = value;
    else if (name == "G1" || name == "G2") {
        if (value < 0.0 || std::floor(value) != value)
            throw ConfigError(ConfigError::Kind::Validation,
                              name + " grid values must be nonnegative integers");
        cfg.groups[name == "G1" ? 0 : 1].size = static_cast<std::size_t>(value);
    } else {
        throw ConfigError(ConfigError::Kind::Validation, "unknown sweep parameter: " + name);
    }
}

double get_param(const ScenarioConfig& cfg, const std::string& name) {
    if (name == "C_B") return cfg.globals.backup_unit_cost;
    if (name == "C_A") return cfg.globals.attack_unit_cost;
    if (name == "beta") return cfg.globals.discount;
    if (name == "D") return cfg.globals.base_difficulty;
    if (name == "C_D") return cfg.globals.dev_cost;
    if (name == "W1") return cfg.groups[0].wealth;
    if (name == "W2") return cfg.groups[1].wealth;
    if (name == "F1") return cfg.groups[0].failure_loss;
    if (name == "F2") return cfg.groups[1].failure_loss;
    if (name == "L1") return cfg.groups[0].ransom_loss;
    if (name == "L2") return cfg.groups[1].ransom_loss;
    if (name == "T1") return cfg.groups[0].interruption_loss;
    if (name == "T2") return cfg.groups[1].interruption_loss;
    if (name == "G1") return static_cast<double>(cfg.groups[0].size);
    if (name == "G2") return static_cast<double>(cfg.groups[1].size);
    throw ConfigError(ConfigError::Kind::Validation, "unknown sweep parameter: " + name);
}

const char* const kResultColumns[] = {
    "NE_b",           "NE_b1",           "NE_b2",           "SO_b",
    "SO_b1",          "SO_b2",           "NE_org_payoff",   "NE_org1_payoff",
    "NE_org2_payoff", "SO_org_payoff",   "SO_org1_payoff",  "SO_org2_payoff",
    "NE_att_payoff",  "SO_att_payoff",   "state"};

bool known_result_column(const std::string& name) {
    for (const char* c : kResultColumns)
        if (name == c) return true;
    return false;
}

struct PointResult {
    bool error = false;
    SolveOutcome ne;
    SocialOptimum so;
};

std::string extract_cell(const std::string& col, const ScenarioConfig& cfg,
                         const PointResult& pr) {
    if (!known_result_column(col)) return format_cell(get_param(cfg, col));
    if (col == "state") return pr.error ? "error" : to_string(pr.ne.kind);
    if (pr.error) return {};
    const bool ne_ok = pr.ne.kind != SolveKind::NotFound;
    if (col == "NE_b" || col == "NE_b1") return ne_ok ? format_cell(pr.ne.defenders.backup_1) : "";
    if (col == "NE_b2") return ne_ok ? format_cell(pr.ne.defenders.backup_2) : "";
    if (col == "NE_org_payoff" || col == "NE_org1_payoff")
        return ne_ok ? format_cell(pr.ne.report.org_payoff_1) : "";
    if (col == "NE_org2_payoff") return ne_ok ? format_cell(pr.ne.report.org_payoff_2) : "";
    if (col == "NE_att_payoff") return ne_ok ? format_cell(pr.ne.report.attacker_payoff) : "";
    if (col == "SO_b" || col == "SO_b1") return format_cell(pr.so.defenders.backup_1);
    if (col == "SO_b2") return format_cell(pr.so.defenders.backup_2);
    if (col == "SO_org_payoff" || col == "SO_org1_payoff")
        return format_cell(pr.so.report.org_payoff_1);
    if (col == "SO_org2_payoff") return format_cell(pr.so.report.org_payoff_2);
    if (col == "SO_att_payoff") return format_cell(pr.so.report.attacker_payoff);
    return {};
}

SweepAxis parse_axis(const std::string& prefix,
                     const std::vector<std::pair<std::string, std::string>>& entries,
                     bool required, const std::string& origin, bool* present) {
    SweepAxis axis;
    bool any = false, have_min = false, have_max = false;
    for (const auto& [k, v] : entries) {
        if (k.rfind(prefix + ".", 0) != 0) continue;
        any = true;
        const std::string field = k.substr(prefix.size() + 1);
        if (field == "param") axis.param = v;
        else if (field == "min") { axis.min = std::strtod(v.c_str(), nullptr); have_min = true; }
        else if (field == "max") { axis.max = std::strtod(v.c_str(), nullptr); have_max = true; }
        else if (field == "step") axis.step = std::strtod(v.c_str(), nullptr);
        else if (field == "count") axis.count = static_cast<std::size_t>(std::strtoull(v.c_str(), nullptr, 10));
        else
            throw ConfigError(ConfigError::Kind::Validation,
                              origin + ": unknown axis field " + k);
    }
    *present = any;
    if (!any) {
        if (required)
            throw ConfigError(ConfigError::Kind::Validation, origin + ": missing " + prefix);
        return axis;
    }
    if (axis.param.empty() || !known_axis_param(axis.param))
        throw ConfigError(ConfigError::Kind::Validation,
                          origin + ": " + prefix + ".param must name a sweep parameter");
    if (!have_min || !have_max || !(axis.max >= axis.min))
        throw ConfigError(ConfigError::Kind::Validation,
                          origin + ": " + prefix + " needs min <= max");
    if (axis.count == 0 && !(axis.step > 0.0))
        throw ConfigError(ConfigError::Kind::Validation,
                          origin + ": " + prefix + " needs step > 0 or count >= 1");
    return axis;
}

}  // namespace

SweepSpec parse_sweep_spec(const std::string& text, const std::string& origin) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r\n");
            if (a == std::string::npos) return std::string{};
            const auto b = s.find_last_not_of(" \t\r\n");
            return s.substr(a, b - a + 1);
        };
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError(ConfigError::Kind::Parse,
                              origin + ":" + std::to_string(lineno) + ": expected key=value");
        entries.emplace_back(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
    }

    SweepSpec spec;
    bool present = false;
    spec.axis1 = parse_axis("axis1", entries, true, origin, &present);
    SweepAxis axis2 = parse_axis("axis2", entries, false, origin, &present);
    if (present) spec.axis2 = axis2;
    for (const auto& [k, v] : entries) {
        if (k != "outputs") continue;
        std::istringstream cols(v);
        std::string col;
        while (std::getline(cols, col, ',')) {
            const auto a = col.find_first_not_of(" \t");
            const auto b = col.find_last_not_of(" \t");
            if (a == std::string::npos) continue;
            spec.outputs.push_back(col.substr(a, b - a + 1));
        }
    }
    if (spec.outputs.empty())
        throw ConfigError(ConfigError::Kind::Validation, origin + ": outputs must be nonempty");
    for (const std::string& col : spec.outputs)
        if (!known_result_column(col) && !known_axis_param(col))
            throw ConfigError(ConfigError::Kind::Validation, origin + ": unknown column " + col);
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(ConfigError::Kind::Io, "cannot open sweep spec: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sweep_spec(buf.str(), path);
}

std::string format_cell(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

SweepTable run_sweep(const ScenarioConfig& base, const SweepSpec& spec) {
    const std::vector<double> v1 = spec.axis1.values();
    const std::vector<double> v2 =
        spec.axis2 ? spec.axis2->values() : std::vector<double>{0.0};
    const std::size_t total = v1.size() * v2.size();

    std::vector<ScenarioConfig> configs(total, base);
    std::vector<PointResult> results(total);
    // Axis 1 is the outer loop; its value is constant within each block.
    for (std::size_t i = 0; i < v1.size(); ++i)
        for (std::size_t k = 0; k < v2.size(); ++k) {
            ScenarioConfig& cfg = configs[i * v2.size() + k];
            set_param(cfg, spec.axis1.param, v1[i]);
            if (spec.axis2) set_param(cfg, spec.axis2->param, v2[k]);
        }

    auto solve_point = [&](std::size_t idx) {
        PointResult& pr = results[idx];
        try {
            const ScenarioConfig& cfg = configs[idx];
            validate_config(cfg);
            pr.ne = find_equilibrium(cfg.groups, cfg.globals, cfg.solver);
            std::vector<DefenderProfile> seeds{pr.ne.defenders};
            for (const Profile& p : pr.ne.cycle) seeds.push_back(p.defenders);
            pr.so = social_optimum(cfg.groups, cfg.globals, cfg.solver, seeds);
        } catch (const std::exception&) {
            pr.error = true;
        }
    };

    // Worker pool; results land in preallocated slots so scheduling cannot
    // affect row order or values.
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), total);
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) solve_point(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1))
                    solve_point(i);
            });
        for (std::thread& t : pool) t.join();
    }

    SweepTable table;
    table.columns = spec.outputs;
    table.rows.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<std::string> row;
        row.reserve(spec.outputs.size());
        for (const std::string& col : spec.outputs)
            row.push_back(extract_cell(col, configs[idx], results[idx]));
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_csv(const SweepTable& table, const std::string& path) {
    if (table.columns.empty() || table.rows.empty())
        throw std::runtime_error("refusing to write empty sweep table");
    std::ostringstream out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << ',';
        out << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << row[c];
        }
        out << '\n';
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << out.str();
    if (!file.flush()) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace ransomgame
