#include "jcd/atomic_state.hpp"

#include <cmath>

#include "jcd/errors.hpp"

namespace jcd {

std::array<double, 2> AtomState::eigenvalues() const {
    const double mean = 0.5 * (ee + gg);
    const double half = 0.5 * (ee - gg);
    const double r = std::sqrt(half * half + std::norm(eg));
    return {mean - r, mean + r};
}

std::array<std::array<cplx, 2>, 2> AtomState::matrix() const {
    return {{{cplx{ee}, eg}, {std::conj(eg), cplx{gg}}}};
}

void validate(const AtomState& state) {
    if (std::abs(state.trace() - 1.0) > 1e-10)
        throw GuardError("AtomState: trace deviates from 1");
    if (state.eigenvalues()[0] < -1e-12)
        throw GuardError("AtomState: negative eigenvalue");
}

AtomState reduce(const JointState& joint) {
    AtomState rho;
    const std::size_t len = std::min(joint.a_amps.size(), joint.b_amps.size());
    for (std::size_t n = 0; n < len; ++n) {
        rho.ee += std::norm(joint.a_amps[n]);
        rho.gg += std::norm(joint.b_amps[n]);
        rho.eg += joint.a_amps[n] * std::conj(joint.b_amps[n]);
    }
    for (std::size_t n = len; n < joint.a_amps.size(); ++n)
        rho.ee += std::norm(joint.a_amps[n]);
    for (std::size_t n = len; n < joint.b_amps.size(); ++n)
        rho.gg += std::norm(joint.b_amps[n]);
    return rho;
}

double purity(const AtomState& state) {
    return state.ee * state.ee + state.gg * state.gg + 2.0 * std::norm(state.eg);
}

} // namespace jcd
