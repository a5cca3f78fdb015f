#pragma once

#include "jcd/params.hpp"

namespace jcd {

/// Abstract two-state unambiguous discrimination instance: input overlap s,
/// post-measurement overlap t_overlap, and the inconclusive-branch weights
/// of the first (b) and second (c) measurement stage.
struct DiscriminationInstance {
    Priors priors{};
    double s = 0.5;          // |<psi1|psi2>|, in (0,1)
    double t_overlap = 1.0;  // |<chi1|chi2>| after the first stage, in (0,1]
    double q1b = 1.0, q2b = 1.0;
    double q1c = 1.0, q2c = 1.0;
};

/// Throws ConfigError unless all weights lie in [0,1], s in (0,1),
/// t_overlap in (0,1], and q1b q2b >= s^2 / t_overlap^2 (unitarity of the
/// first stage; equality at the optimum).
void validate(const DiscriminationInstance& instance);

/// Failure floor with a three-level ancilla: 2 sqrt(P1 P2) s while
/// s < sqrt(P1/P2), else P1 + P2 s^2.
double unambiguous_bound_qutrit(const Priors& priors, double s);

/// Failure floor with a two-level ancilla (one state is never identified):
/// P1 + P2 s^2.
double unambiguous_bound_two_level(const Priors& priors, double s);

/// Q_qutrit - P_err(Helstrom), certified >= 0; also enforces the chain
/// two_level >= qutrit >= helstrom (GuardError beyond -1e-12 slack).
double theorem1_gap(const Priors& priors, double s);

/// Total failure of the two-stage nondestructive scheme:
/// P1 q1b q1c + P2 q2b q2c. Cross-checked internally against the
/// success-probability decomposition 1 - [P_A + (1 - P_A) P_B] built from
/// the same weights; disagreement beyond 1e-12 throws GuardError.
double sequential_failure_abstract(const DiscriminationInstance& instance);

} // namespace jcd
