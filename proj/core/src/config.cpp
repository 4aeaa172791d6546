#include "ransomgame/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ransomgame {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError(ConfigError::Kind::Validation,
                          "invalid numeric value for " + key + ": '" + value + "'");
    return x;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
    const double x = parse_number(key, value);
    const auto n = static_cast<long long>(x);
    if (x < 0.0 || static_cast<double>(n) != x)
        throw ConfigError(ConfigError::Kind::Validation,
                          key + " must be a nonnegative integer, got '" + value + "'");
    return static_cast<std::size_t>(n);
}

}  // namespace

void apply_setting(ScenarioConfig& cfg, const std::string& raw_key, const std::string& value) {
    const std::string key = trim(raw_key);
    auto num = [&] { return parse_number(key, value); };
    auto cnt = [&] { return parse_count(key, value); };

    auto group_field = [&](GroupParams& g, const std::string& field) {
        if (field == "size" || field == "count") g.size = cnt();
        else if (field == "W" || field == "wealth") g.wealth = num();
        else if (field == "F" || field == "failure_loss") g.failure_loss = num();
        else if (field == "L" || field == "ransom_loss") g.ransom_loss = num();
        else if (field == "T" || field == "interruption_loss") g.interruption_loss = num();
        else
            throw ConfigError(ConfigError::Kind::Validation, "unknown key: " + key);
    };

    if (key.rfind("group1.", 0) == 0) return group_field(cfg.groups[0], key.substr(7));
    if (key.rfind("group2.", 0) == 0) return group_field(cfg.groups[1], key.substr(7));

    // Short sweep-axis aliases.
    if (key == "G1") { cfg.groups[0].size = cnt(); return; }
    if (key == "G2") { cfg.groups[1].size = cnt(); return; }
    if (key.size() == 2 && (key[1] == '1' || key[1] == '2')) {
        GroupParams& g = cfg.groups[key[1] == '1' ? 0 : 1];
        switch (key[0]) {
            case 'W': g.wealth = num(); return;
            case 'F': g.failure_loss = num(); return;
            case 'L': g.ransom_loss = num(); return;
            case 'T': g.interruption_loss = num(); return;
            default: break;
        }
    }

    std::string k = key;
    if (k.rfind("globals.", 0) == 0) k = k.substr(8);
    if (k == "beta" || k == "discount") { cfg.globals.discount = num(); return; }
    if (k == "D" || k == "base_difficulty") { cfg.globals.base_difficulty = num(); return; }
    if (k == "C_B" || k == "backup_unit_cost") { cfg.globals.backup_unit_cost = num(); return; }
    if (k == "C_A" || k == "attack_unit_cost") { cfg.globals.attack_unit_cost = num(); return; }
    if (k == "C_D" || k == "dev_cost") { cfg.globals.dev_cost = num(); return; }

    if (key.rfind("solver.", 0) == 0) {
        const std::string field = key.substr(7);
        SolverOptions& s = cfg.solver;
        if (field == "tolerance" || field == "verify_tolerance") s.verify_tolerance = num();
        else if (field == "cycle_tolerance") s.cycle_tolerance = num();
        else if (field == "max_iterations") s.max_iterations = cnt();
        else if (field == "damping") s.damping = num();
        else if (field == "so_grid") s.so_grid = cnt();
        else if (field == "so_min") s.so_min = num();
        else if (field == "so_max") s.so_max = num();
        else if (field == "so_refine_tol") s.so_refine_tol = num();
        else
            throw ConfigError(ConfigError::Kind::Validation, "unknown key: " + key);
        return;
    }

    throw ConfigError(ConfigError::Kind::Validation, "unknown key: " + key);
}

ScenarioConfig parse_config(const std::string& text, const std::string& origin) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError(ConfigError::Kind::Parse,
                              origin + ":" + std::to_string(lineno) + ": expected key=value");
        apply_setting(cfg, body.substr(0, eq), trim(body.substr(eq + 1)));
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError(ConfigError::Kind::Io, "cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    ScenarioConfig cfg = parse_config(buf.str(), path);
    validate_config(cfg);
    return cfg;
}

void validate_config(const ScenarioConfig& cfg) {
    try {
        validate(cfg.groups[0], "group1");
        validate(cfg.groups[1], "group2");
        validate(cfg.globals);
    } catch (const DomainError& e) {
        throw ConfigError(ConfigError::Kind::Validation, e.what());
    }
    if (cfg.groups[0].size == 0 && cfg.groups[1].size == 0)
        throw ConfigError(ConfigError::Kind::Validation,
                          "at least one group must have size >= 1");
    const SolverOptions& s = cfg.solver;
    auto bad = [](const std::string& msg) {
        throw ConfigError(ConfigError::Kind::Validation, msg);
    };
    if (!(s.verify_tolerance > 0.0)) bad("solver.tolerance must be > 0");
    if (!(s.cycle_tolerance > 0.0)) bad("solver.cycle_tolerance must be > 0");
    if (s.max_iterations == 0) bad("solver.max_iterations must be >= 1");
    if (!(s.damping > 0.0 && s.damping <= 1.0)) bad("solver.damping must be in (0, 1]");
    if (s.so_grid < 2) bad("solver.so_grid must be >= 2");
    if (!(s.so_min > 0.0 && s.so_max > s.so_min)) bad("solver.so_min/so_max must satisfy 0 < min < max");
    if (!(s.so_refine_tol > 0.0)) bad("solver.so_refine_tol must be > 0");
}

ScenarioConfig baseline_config() {
    ScenarioConfig cfg;
    cfg.groups[0] = GroupParams{100, 100.0, 5.0, 5.0, 10.0};
    cfg.globals.discount = 0.9;
    cfg.globals.base_difficulty = 10.0;
    cfg.globals.backup_unit_cost = 1.0;
    cfg.globals.attack_unit_cost = 10.0;
    cfg.globals.dev_cost = 10.0;
    return cfg;
}

}  // namespace ransomgame
