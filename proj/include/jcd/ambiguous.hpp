#pragma once

#include "jcd/atomic_state.hpp"
#include "jcd/grid.hpp"

namespace jcd {

/// Rank-1 projective measurement on the atom, Pi = |phi><phi| with
/// |phi> = (|g> + e^{i theta} r |e>) / sqrt(1 + r^2).
struct Measurement {
    double r = 1.0;
    double theta = 0.0;
};

/// Measured bias between the two reduced atomic states at time gt:
/// |Tr Pi (P1 rho(alpha) - P2 rho(-alpha))| - |P1 - P2| / 2
/// for the given measurement.
double trace_distance(const JcParams& params, double gt, const Measurement& m);

/// Same objective maximized over all rank-1 projectors in closed form:
/// max(|lambda+|, |lambda-|) of the weighted difference matrix, minus
/// |P1 - P2| / 2.
double trace_distance_optimal(const JcParams& params, double gt);

struct MinErrorResult {
    double p_err_min;   // min over gt of (1 - 2 D) / 2
    double gt_star;     // minimizing time, refined to ~1e-4
};

/// Grid scan of the optimal trace distance over gt, with local parabolic
/// refinement of the best point.
MinErrorResult min_error_probability(const JcParams& params,
                                     const GridSpec& gt_grid);

/// Ideal minimum-error failure probability for two pure states of overlap
/// modulus s: (1 - sqrt(1 - 4 P1 P2 s^2)) / 2. For coherent inputs
/// |alpha>, |-alpha> use s = exp(-2 |alpha|^2).
double helstrom_bound(const Priors& priors, double s);

} // namespace jcd
