#include "jcd/ambiguous.hpp"

#include <cmath>

#include "jcd/errors.hpp"

namespace jcd {

namespace {

// Weighted difference M = P1 rho(alpha) - P2 rho(-alpha) at time gt,
// in the same compact Hermitian layout as AtomState.
AtomState weighted_difference(const JcParams& params, double gt) {
    const FockVector plus = coherent_amplitudes(params.alpha, params.n_max);
    const FockVector minus = coherent_amplitudes(-params.alpha, params.n_max);
    const AtomState rp = reduce(evolve(params, plus, gt));
    const AtomState rm = reduce(evolve(params, minus, gt));
    AtomState m;
    m.ee = params.priors.p1 * rp.ee - params.priors.p2 * rm.ee;
    m.gg = params.priors.p1 * rp.gg - params.priors.p2 * rm.gg;
    m.eg = params.priors.p1 * rp.eg - params.priors.p2 * rm.eg;
    return m;
}

} // namespace

double trace_distance(const JcParams& params, double gt, const Measurement& m) {
    if (m.r < 0.0) throw ConfigError("measurement: r must be >= 0");
    const AtomState diff = weighted_difference(params, gt);
    // <phi| M |phi> with phi = (e^{i theta} r, 1) / sqrt(1 + r^2) in (e, g)
    const cplx phase = std::exp(cplx{0.0, m.theta});
    const double denom = 1.0 + m.r * m.r;
    const double expect =
        (m.r * m.r * diff.ee + diff.gg +
         2.0 * m.r * std::real(std::conj(phase) * diff.eg)) /
        denom;
    return std::abs(expect) - 0.5 * std::abs(params.priors.p1 - params.priors.p2);
}

double trace_distance_optimal(const JcParams& params, double gt) {
    const AtomState diff = weighted_difference(params, gt);
    const auto [lo, hi] = diff.eigenvalues();
    return std::max(std::abs(lo), std::abs(hi)) -
           0.5 * std::abs(params.priors.p1 - params.priors.p2);
}

MinErrorResult min_error_probability(const JcParams& params,
                                     const GridSpec& gt_grid) {
    validate(gt_grid);
    if (gt_grid.lo < 0.0)
        throw ConfigError("min_error_probability: gt grid must start at >= 0");
    const ScanResult best = scan_maximum(
        [&](double gt) { return trace_distance_optimal(params, gt); }, gt_grid,
        1e-4);
    return {0.5 * (1.0 - 2.0 * best.value), best.location};
}

double helstrom_bound(const Priors& priors, double s) {
    validate(priors);
    if (!(s >= 0.0 && s <= 1.0))
        throw ConfigError("helstrom_bound: overlap must be in [0,1]");
    const double radicand =
        std::max(0.0, 1.0 - 4.0 * priors.p1 * priors.p2 * s * s);
    return 0.5 * (1.0 - std::sqrt(radicand));
}

} // namespace jcd
