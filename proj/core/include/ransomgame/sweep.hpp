#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ransomgame/config.hpp"
#include "ransomgame/solver.hpp"

namespace ransomgame {

// One swept parameter.  Values are min + i * step (or an evenly spaced grid
// of `count` points when count > 0), never a running sum, so grids are
// reproducible.  Parameter names come from the config key set
// (C_B, C_A, beta, D, C_D, L1, L2, F1, F2, T1, T2, W1, W2, G1, G2).
struct SweepAxis {
    std::string param;
    double min = 0.0;
    double max = 0.0;
    double step = 0.0;       // used when count == 0
    std::size_t count = 0;   // 0 means derive the grid from step

    std::vector<double> values() const;
};

struct SweepSpec {
    SweepAxis axis1;
    std::optional<SweepAxis> axis2;
    std::vector<std::string> outputs;  // column names, written in this order
};

SweepSpec load_sweep_spec(const std::string& path);
SweepSpec parse_sweep_spec(const std::string& text, const std::string& origin = "<string>");

// Rectangular, already formatted result table.  Numeric cells carry at least
// nine significant digits; missing values are empty strings.
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// Solves equilibrium and social optimum at every grid point and extracts the
// requested columns.  Axis 1 is the outer loop for 2-D grids.  Points are
// evaluated by a small worker pool; row order and cell values do not depend
// on scheduling.  A point whose solve fails is recorded in its row (empty
// payoff fields, "not_found"/"error" state), never aborting the sweep.
SweepTable run_sweep(const ScenarioConfig& base, const SweepSpec& spec);

// Writes header plus rows, comma-separated, no trailing delimiter, final
// newline.  Refuses an empty table and leaves no file behind in that case.
void write_csv(const SweepTable& table, const std::string& path);

std::string format_cell(double value);  // shortest form with >= 9 significant digits

}  // namespace ransomgame
