#pragma once

#include <complex>

#include "jcd/fock.hpp"

namespace jcd {

struct Priors {
    double p1 = 0.5;
    double p2 = 0.5;
};

/// Throws ConfigError unless p1, p2 >= 0 and p1 + p2 = 1 (within 1e-12).
void validate(const Priors& priors);

/// Physical configuration of one atom-field discrimination run. Time enters
/// only as the dimensionless product gt; all frequencies are in units of the
/// coupling g, so omega_over_g fixes the counter-rotating phases exactly.
/// The drive is on resonance (field and transition frequency equal).
struct JcParams {
    cplx alpha;                   // coherent amplitude of the undisplaced input
    double omega_over_g = 20.0;   // field frequency over coupling
    bool rwa = false;             // true: drop first-order counter-rotating terms
    Priors priors{};
    int n_max = 0;                // photon-number truncation
    double eps_trunc = 1e-12;     // tail probability budget used to size n_max
};

/// Throws ConfigError for malformed fields, GuardError when the perturbative
/// small-denominator condition n_max + 2 < (2 omega/g)^2 fails.
void validate(const JcParams& params);

/// Convenience constructor: sizes n_max from the Poisson tail of the largest
/// field in the run. alpha_sq_basis < 0 means "this alpha only"; a sweep
/// passes its largest |alpha|^2 so every point shares one basis.
JcParams make_params(cplx alpha, double omega_over_g, bool rwa,
                     Priors priors = {}, double eps_trunc = 1e-12,
                     double alpha_sq_basis = -1.0);

} // namespace jcd
