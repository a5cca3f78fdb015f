#pragma once

#include "jcd/evolution.hpp"

namespace jcd {

/// Fixed-step classical 4th-order integration of the interaction-picture
/// equations of motion in the truncated basis:
///   i dA_n/d(gt) = B_{n+1} sqrt(n+1) + B_{n-1} sqrt(n) e^{+2i (w/g) gt}
///   i dB_n/d(gt) = A_{n-1} sqrt(n)   + A_{n+1} sqrt(n+1) e^{-2i (w/g) gt}
/// with A_{-1} = B_{-1} = 0 and A_n = B_n = 0 above n_max. Kept free of the
/// perturbative code paths so it can arbitrate them.
struct OdeStats {
    double max_norm_drift = 0.0;  // largest |norm^2 - 1| seen before fixes
    long renormalizations = 0;
};

struct OdeConfig {
    /// Step in gt. Must satisfy dt <= min(1e-3, 0.1 / (2 omega/g)) so the
    /// counter-rotating phases are resolved; <= 0 selects that bound.
    double dt = -1.0;
    /// Drop the e^{+-2i w t} terms: the integrand of the exchange-only model,
    /// whose analytic solution is known. Used to validate the integrator.
    bool rwa_integrand = false;
    /// Optional drift telemetry.
    OdeStats* stats = nullptr;
};

double max_stable_dt(double omega_over_g);

/// Integrate to gt_end (params.rwa is ignored here; the integrand is chosen
/// by cfg.rwa_integrand). Norm drift beyond 1e-8 renormalizes with a warning
/// on stderr; drift beyond 1e-6 throws GuardError.
JointState integrate(const JcParams& params, const FockVector& initial,
                     double gt_end, const OdeConfig& cfg);

/// sqrt of the summed squared amplitude differences, padding the shorter
/// arrays with zeros.
double state_distance(const JointState& a, const JointState& b);

} // namespace jcd
