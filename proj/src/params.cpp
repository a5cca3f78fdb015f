#include "jcd/params.hpp"

#include <cmath>
#include <string>

#include "jcd/errors.hpp"

namespace jcd {

void validate(const Priors& priors) {
    if (!(priors.p1 >= 0.0) || !(priors.p2 >= 0.0))
        throw ConfigError("priors must be nonnegative");
    if (std::abs(priors.p1 + priors.p2 - 1.0) > 1e-12)
        throw ConfigError("priors must sum to 1");
}

void validate(const JcParams& params) {
    validate(params.priors);
    if (!(params.omega_over_g > 0.0))
        throw ConfigError("omega_over_g must be > 0");
    if (params.n_max < 0) throw ConfigError("n_max must be >= 0");
    if (!(params.eps_trunc > 0.0 && params.eps_trunc < 1.0))
        throw ConfigError("eps_trunc must be in (0,1)");
    // Keep every perturbative denominator k2(n) bounded away from zero for
    // all n the evolution touches (up to n_max + 2).
    const double w2 = 2.0 * params.omega_over_g;
    if (static_cast<double>(params.n_max) + 2.0 >= w2 * w2)
        throw GuardError(
            "perturbative regime violated: n_max + 2 must stay below "
            "(2 omega/g)^2 = " +
            std::to_string(w2 * w2));
}

JcParams make_params(cplx alpha, double omega_over_g, bool rwa, Priors priors,
                     double eps_trunc, double alpha_sq_basis) {
    JcParams p;
    p.alpha = alpha;
    p.omega_over_g = omega_over_g;
    p.rwa = rwa;
    p.priors = priors;
    p.eps_trunc = eps_trunc;
    double basis = alpha_sq_basis >= 0.0 ? alpha_sq_basis : std::norm(alpha);
    if (basis <= 0.0) basis = 0.25;  // vacuum input still gets a small basis
    p.n_max = choose_truncation(basis, eps_trunc);
    validate(p);
    return p;
}

} // namespace jcd
