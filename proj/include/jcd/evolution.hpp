#pragma once

#include <vector>

#include "jcd/params.hpp"

namespace jcd {

/// Joint atom-field state at dimensionless time gt, expanded as
/// sum_n a_amps[n] |e,n> + b_amps[n] |g,n>. Both arrays share one index
/// range; produced states are normalized.
struct JointState {
    std::vector<cplx> a_amps;
    std::vector<cplx> b_amps;
    double gt = 0.0;

    double norm_sq() const;
};

/// Counter-rotating denominators in units of g: k1 = 2 omega/g + sqrt(n),
/// k2 = 2 omega/g - sqrt(n). k2 throws GuardError within 1e-6 of zero,
/// where the first-order phase integral blows up.
double k1(int n, double omega_over_g);
double k2(int n, double omega_over_g);

/// Zero-order and first-order pieces of the evolved state, before the
/// common normalization. Arrays have length initial.n_max() + 2; the
/// first-order parts are identically zero when params.rwa is set.
struct EvolutionParts {
    std::vector<cplx> a_zero, b_zero;
    std::vector<cplx> a_prime, b_prime;

    double correction_norm_sq() const;
};

EvolutionParts perturbation_parts(const JcParams& params,
                                  const FockVector& initial, double gt);

/// Evolve |initial> (x) |g> under the resonant atom-field interaction for
/// dimensionless time gt. Zero order is the exchange-term solution; with
/// params.rwa == false the first-order counter-rotating corrections are
/// added. The result is rescaled to unit norm at this gt.
///
/// Requires a normalized initial vector and gt >= 0.
JointState evolve(const JcParams& params, const FockVector& initial, double gt);

/// sum_n |a_amps[n]|^2: probability of finding the atom excited.
double excitation_probability(const JointState& state);

} // namespace jcd
