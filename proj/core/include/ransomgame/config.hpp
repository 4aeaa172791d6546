#pragma once

#include <string>

#include "ransomgame/payoff.hpp"
#include "ransomgame/solver.hpp"
#include "ransomgame/types.hpp"

namespace ransomgame {

struct ScenarioConfig {
    Groups groups{};          // group 2 defaults to size 0 (single-group scenario)
    GlobalParams globals{};
    SolverOptions solver{};
};

struct ConfigError : std::runtime_error {
    enum class Kind { Io, Parse, Validation };
    Kind kind;
    ConfigError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Flat key=value text: '#' comments, blank lines ignored, whitespace around
// '=' allowed.  Group parameters use dotted prefixes (group1.F=5); globals
// are bare (C_B=1, beta=0.9); solver overrides use solver. prefixes.  Short
// sweep-axis aliases (F1, L2, G1, W2, ...) are accepted everywhere.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(const std::string& text, const std::string& origin = "<string>");

// Applies one KEY=VALUE override to an already-loaded config.  Throws
// ConfigError (Validation) for unknown keys or unparsable values.  Range
// validation is separate so overrides can be applied before it.
void apply_setting(ScenarioConfig& cfg, const std::string& key, const std::string& value);

// Range-checks every parameter; messages name the offending field
// canonically (e.g. backup_unit_cost).  Throws ConfigError (Validation).
void validate_config(const ScenarioConfig& cfg);

ScenarioConfig baseline_config();  // the default single-group study scenario

}  // namespace ransomgame
