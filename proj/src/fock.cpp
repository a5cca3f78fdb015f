#include "jcd/fock.hpp"

#include <cmath>

#include "jcd/errors.hpp"

namespace jcd {

double FockVector::norm_sq() const {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return s;
}

void FockVector::normalize() {
    const double n = norm_sq();
    if (n < 1e-300) throw GuardError("FockVector::normalize: zero vector");
    const double inv = 1.0 / std::sqrt(n);
    for (cplx& a : amps) a *= inv;
}

FockVector coherent_amplitudes(cplx alpha, int n_max) {
    if (n_max < 0) throw ConfigError("coherent_amplitudes: n_max must be >= 0");
    FockVector v;
    v.amps.resize(static_cast<std::size_t>(n_max) + 1);
    v.amps[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= n_max; ++n)
        v.amps[n] = v.amps[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    return v;
}

cplx inner_product(const FockVector& bra, const FockVector& ket) {
    if (bra.amps.size() != ket.amps.size())
        throw ConfigError("inner_product: dimension mismatch");
    cplx s{};
    for (std::size_t n = 0; n < bra.amps.size(); ++n)
        s += std::conj(bra.amps[n]) * ket.amps[n];
    return s;
}

int choose_truncation(double alpha_sq_max, double eps_trunc, int hard_cap) {
    if (!(alpha_sq_max > 0.0))
        throw ConfigError("choose_truncation: alpha_sq_max must be > 0");
    if (!(eps_trunc > 0.0 && eps_trunc < 1.0))
        throw ConfigError("choose_truncation: eps_trunc must be in (0,1)");
    if (hard_cap < 1) throw ConfigError("choose_truncation: hard_cap must be >= 1");

    const double lambda = 4.0 * alpha_sq_max;
    // The tail cannot drop below eps until N is past the Poisson mean; if the
    // mean is already at the cap the regime is unreasonable. Also keeps
    // exp(-lambda) well away from underflow.
    if (lambda >= static_cast<double>(hard_cap))
        throw GuardError("choose_truncation: mean photon number exceeds hard cap");

    const int top = hard_cap + 1;
    std::vector<double> pmf(static_cast<std::size_t>(top) + 1);
    pmf[0] = std::exp(-lambda);
    for (int n = 1; n <= top; ++n)
        pmf[n] = pmf[n - 1] * lambda / static_cast<double>(n);

    // Tail sums accumulated from the top so tiny terms are not swallowed,
    // seeded with a geometric bound for everything above the cap.
    const double ratio = lambda / static_cast<double>(top + 1);
    std::vector<double> tail(pmf.size() + 1, 0.0);
    tail[pmf.size()] = pmf[top] * ratio / (1.0 - ratio);
    for (int n = top; n >= 0; --n) tail[n] = tail[n + 1] + pmf[n];

    for (int N = 0; N <= hard_cap; ++N)
        if (tail[N + 1] < eps_trunc) return N;
    throw GuardError("choose_truncation: truncation would exceed hard cap");
}

} // namespace jcd
