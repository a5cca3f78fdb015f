#include "jcd/kennedy.hpp"

#include <cmath>

#include "jcd/bounds.hpp"
#include "jcd/errors.hpp"

namespace jcd {

FirstMeasurement first_measurement(const JcParams& params,
                                   const GridSpec& gt_grid) {
    validate(gt_grid);
    const FockVector displaced =
        coherent_amplitudes(2.0 * params.alpha, params.n_max);

    const ScanResult best = scan_maximum(
        [&](double gt) {
            return excitation_probability(evolve(params, displaced, gt));
        },
        gt_grid, 1e-4);

    const JointState at_best = evolve(params, displaced, best.location);
    FirstMeasurement fm;
    fm.p_a = best.value;
    fm.gt0 = best.location;
    // Conditioned on |g>: keep the B amplitudes. The top slot is
    // structurally zero (nothing feeds |g, n_max+1>), so trimming it keeps
    // the post state in the run's basis.
    fm.post_state.amps.assign(at_best.b_amps.begin(),
                              at_best.b_amps.end() - 1);
    fm.post_state.normalize();
    return fm;
}

SecondMeasurement second_measurement(const JcParams& params,
                                     const FockVector& post_state,
                                     const GridSpec& gt_grid) {
    validate(gt_grid);
    const ScanResult best = scan_maximum(
        [&](double gt) {
            return excitation_probability(evolve(params, post_state, gt));
        },
        gt_grid, 1e-4);
    return {best.value, best.location};
}

KennedyOutcome sequential_failure(const JcParams& params,
                                  const GridSpec& gt_grid) {
    FirstMeasurement fm = first_measurement(params, gt_grid);
    const SecondMeasurement sm =
        second_measurement(params, fm.post_state, gt_grid);

    KennedyOutcome out;
    out.p_a = fm.p_a;
    out.gt0 = fm.gt0;
    out.post_state = std::move(fm.post_state);
    out.p_b = sm.p_b;
    out.gt1 = sm.gt1;
    const double p1 = params.priors.p1;
    out.q_one = 1.0 - p1 * out.p_a;
    out.q_sm = 1.0 - p1 * (out.p_a + (1.0 - out.p_a) * out.p_b);
    return out;
}

double kennedy_ideal_bound(const Priors& priors, double alpha_sq) {
    if (alpha_sq < 0.0)
        throw ConfigError("kennedy_ideal_bound: alpha_sq must be >= 0");
    // Identical expression to the two-level bound with s = e^{-2 alpha_sq},
    // so the two agree bit for bit.
    return unambiguous_bound_two_level(priors, std::exp(-2.0 * alpha_sq));
}

} // namespace jcd
