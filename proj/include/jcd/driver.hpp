#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jcd/csvio.hpp"
#include "jcd/grid.hpp"
#include "jcd/params.hpp"

namespace jcd {

enum class Mode {
    ambiguous_sweep,
    kennedy_sweep,
    purity,
    bounds_table,
    calibrate,
    verify,
};

enum class RwaMode { on, off, both };

/// Full description of one deterministic run (no RNG anywhere).
struct RunConfig {
    Mode mode = Mode::ambiguous_sweep;

    /// Single working point; when set, ambiguous-sweep scans gt at this
    /// |alpha|^2 instead of sweeping alpha.
    std::optional<double> alpha_sq;
    GridSpec alpha_sq_range{0.1, 5.0, 100};
    GridSpec gt_range{0.0, 10.0, 2001};

    /// Values scanned by calibrate; other modes use the first entry.
    std::vector<double> omega_over_g{20.0};
    RwaMode rwa = RwaMode::both;
    Priors priors{};
    double eps_trunc = 1e-12;

    int measurements = 1;              // kennedy objective: 1 -> q_one, 2 -> q_sm
    std::string purity_field = "2alpha"; // field the ancilla meets: 2alpha | alpha

    /// calibrate: flag coupling ratios whose optimal bias 1 - 2 P_err and
    /// optimizing gt land within (0.005, 0.01) of this working point.
    double target_bias = 0.9960;
    double target_gt = 0.3636;

    std::string out_path;   // CSV destination ("" = stdout only)
    std::string plot_path;  // optional SVG destination
};

struct SweepResult {
    std::vector<SweepRow> rows;          // data rows, input order
    std::vector<SweepRow> extrema_rows;  // kind = min/max
    std::vector<std::string> report;     // human-readable summary lines
    bool ok = true;                      // false if a verify check failed
};

/// Execute the configured sweep: fan the grid out to workers, merge in input
/// order, locate extrema, write CSV/SVG when paths are set. Rows that trip a
/// numerical guard are skipped and reported. Throws ConfigError for bad
/// configs, GuardError when the whole run is invalid.
SweepResult run(const RunConfig& config);

} // namespace jcd
