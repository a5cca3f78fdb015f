#pragma once

#include <array>

#include "jcd/evolution.hpp"

namespace jcd {

/// 2x2 atomic density matrix in the basis (|e>, |g>), stored in compact
/// Hermitian form: real diagonal (ee, gg) and the upper off-diagonal eg.
struct AtomState {
    double ee = 0.0;
    double gg = 0.0;
    cplx eg{};

    double trace() const { return ee + gg; }

    /// Eigenvalues in closed form, ascending.
    std::array<double, 2> eigenvalues() const;

    std::array<std::array<cplx, 2>, 2> matrix() const;
};

/// Throws GuardError if trace deviates from 1 by more than 1e-10 or an
/// eigenvalue drops below -1e-12.
void validate(const AtomState& state);

/// Partial trace over the field: rho_ee = sum |A_n|^2, rho_gg = sum |B_n|^2,
/// rho_eg = sum A_n conj(B_n).
AtomState reduce(const JointState& joint);

/// Tr(rho^2); lies in [1/2, 1] for any single-qubit state.
double purity(const AtomState& state);

} // namespace jcd
