#include "jcd/bounds.hpp"

#include <cmath>

#include "jcd/ambiguous.hpp"
#include "jcd/errors.hpp"

namespace jcd {

namespace {

void check_overlap(double s) {
    if (!(s >= 0.0 && s <= 1.0))
        throw ConfigError("bounds: overlap must be in [0,1]");
}

} // namespace

void validate(const DiscriminationInstance& in) {
    validate(in.priors);
    if (!(in.s > 0.0 && in.s < 1.0))
        throw ConfigError("instance: s must be in (0,1)");
    if (!(in.t_overlap > 0.0 && in.t_overlap <= 1.0))
        throw ConfigError("instance: t_overlap must be in (0,1]");
    for (double q : {in.q1b, in.q2b, in.q1c, in.q2c})
        if (!(q >= 0.0 && q <= 1.0))
            throw ConfigError("instance: branch weights must be in [0,1]");
    const double floor = in.s * in.s / (in.t_overlap * in.t_overlap);
    if (in.q1b * in.q2b < floor - 1e-9)
        throw ConfigError(
            "instance: unitarity requires q1b * q2b >= s^2 / t^2");
}

double unambiguous_bound_qutrit(const Priors& priors, double s) {
    validate(priors);
    check_overlap(s);
    // regime split s < sqrt(P1/P2), written division-free
    if (s * s * priors.p2 < priors.p1)
        return 2.0 * std::sqrt(priors.p1 * priors.p2) * s;
    return priors.p1 + priors.p2 * s * s;
}

double unambiguous_bound_two_level(const Priors& priors, double s) {
    validate(priors);
    check_overlap(s);
    return priors.p1 + priors.p2 * s * s;
}

double theorem1_gap(const Priors& priors, double s) {
    const double q1 = unambiguous_bound_qutrit(priors, s);
    const double q2 = unambiguous_bound_two_level(priors, s);
    const double pe = helstrom_bound(priors, s);
    if (q2 < q1 - 1e-12 || q1 < pe - 1e-12)
        throw GuardError("bound chain two_level >= qutrit >= helstrom violated");
    return q1 - pe;
}

double sequential_failure_abstract(const DiscriminationInstance& in) {
    validate(in);
    const double p1 = in.priors.p1, p2 = in.priors.p2;
    const double direct = p1 * in.q1b * in.q1c + p2 * in.q2b * in.q2c;

    // Same quantity through the success probabilities of the two stages.
    const double q_first = p1 * in.q1b + p2 * in.q2b;
    const double p_a = 1.0 - q_first;
    double p_b = 0.0;
    if (q_first > 0.0) {
        const double c1 = p1 * in.q1b / q_first;  // conditional priors after
        const double c2 = p2 * in.q2b / q_first;  // an inconclusive round
        p_b = c1 * (1.0 - in.q1c) + c2 * (1.0 - in.q2c);
    }
    const double composed = 1.0 - (p_a + (1.0 - p_a) * p_b);

    if (std::abs(direct - composed) > 1e-12)
        throw GuardError("sequential failure decomposition mismatch");
    return direct;
}

} // namespace jcd
