#pragma once

#include <complex>
#include <vector>

namespace jcd {

using cplx = std::complex<double>;

/// Amplitudes over a truncated photon-number basis, index = photon number n.
struct FockVector {
    std::vector<cplx> amps;

    int n_max() const { return static_cast<int>(amps.size()) - 1; }

    double norm_sq() const;

    /// Rescale to unit norm. Throws GuardError on a (near-)zero vector.
    void normalize();
};

/// Amplitudes of the coherent state with complex amplitude `alpha` on the
/// basis 0..n_max: amps[n] = exp(-|alpha|^2/2) alpha^n / sqrt(n!), built by
/// the recurrence amps[n] = amps[n-1] * alpha / sqrt(n).
FockVector coherent_amplitudes(cplx alpha, int n_max);

/// <bra|ket> with conjugation on the bra; both vectors in the same basis.
cplx inner_product(const FockVector& bra, const FockVector& ket);

/// Smallest N whose Poisson(4*alpha_sq_max) upper tail is below eps_trunc.
/// The factor 4 sizes the basis for a displaced state of amplitude 2*alpha,
/// the largest field any scheme here evolves. Throws GuardError if N would
/// exceed hard_cap.
int choose_truncation(double alpha_sq_max, double eps_trunc, int hard_cap = 512);

} // namespace jcd
