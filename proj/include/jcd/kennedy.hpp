#pragma once

#include "jcd/ambiguous.hpp"

namespace jcd {

/// One round of the displaced-input receiver: the |alpha> branch arrives as
/// |2 alpha>, the |-alpha> branch as vacuum, which never excites the atom,
/// so an |e> click identifies the first state with certainty.
struct FirstMeasurement {
    double p_a;            // excitation probability at the optimal time
    double gt0;            // optimal first interaction time
    FockVector post_state; // field state conditioned on the ground outcome
};

/// Maximize sum_n |A_n(2 alpha, gt)|^2 over the gt grid (with refinement).
FirstMeasurement first_measurement(const JcParams& params,
                                   const GridSpec& gt_grid);

struct SecondMeasurement {
    double p_b;  // excitation probability of a fresh atom at the optimal time
    double gt1;  // optimal second interaction time
};

/// Re-run the same interaction kernel on the leftover field with a fresh
/// ground-state atom and maximize its excitation over gt.
SecondMeasurement second_measurement(const JcParams& params,
                                     const FockVector& post_state,
                                     const GridSpec& gt_grid);

struct KennedyOutcome {
    double p_a;
    double gt0;
    FockVector post_state;
    double p_b;
    double gt1;
    double q_one;  // failure with one measurement: 1 - P1 p_a
    double q_sm;   // failure with two: 1 - P1 [p_a + (1 - p_a) p_b]
};

/// Compose both measurements, each optimizing its own interaction time.
KennedyOutcome sequential_failure(const JcParams& params,
                                  const GridSpec& gt_grid);

/// Ideal failure floor of the displacement receiver: P1 + P2 e^{-4 alpha_sq}.
double kennedy_ideal_bound(const Priors& priors, double alpha_sq);

} // namespace jcd
