#include "jcd/evolution.hpp"

#include <cmath>
#include <string>

#include "jcd/errors.hpp"

namespace jcd {

namespace {

constexpr cplx kImagUnit{0.0, 1.0};

// integral_0^t e^{iK s} ds times iK, i.e. (1 - e^{iK gt}) / K with K in
// units of g and t as gt. The caller guarantees |K| is not small.
cplx phase_integral(double k, double gt) {
    return (1.0 - std::exp(kImagUnit * k * gt)) / k;
}

double norm_tolerance(double eps_trunc) {
    return std::max(1e-10, 10.0 * eps_trunc);
}

} // namespace

double JointState::norm_sq() const {
    double s = 0.0;
    for (const cplx& a : a_amps) s += std::norm(a);
    for (const cplx& b : b_amps) s += std::norm(b);
    return s;
}

double k1(int n, double omega_over_g) {
    return 2.0 * omega_over_g + std::sqrt(static_cast<double>(n));
}

double k2(int n, double omega_over_g) {
    const double v = 2.0 * omega_over_g - std::sqrt(static_cast<double>(n));
    if (std::abs(v) < 1e-6)
        throw GuardError("k2: denominator 2 omega/g - sqrt(n) vanishes at n = " +
                         std::to_string(n));
    return v;
}

double EvolutionParts::correction_norm_sq() const {
    double s = 0.0;
    for (const cplx& a : a_prime) s += std::norm(a);
    for (const cplx& b : b_prime) s += std::norm(b);
    return s;
}

EvolutionParts perturbation_parts(const JcParams& params,
                                  const FockVector& initial, double gt) {
    validate(params);
    if (gt < 0.0) throw ConfigError("evolve: gt must be >= 0");
    if (std::abs(initial.norm_sq() - 1.0) > norm_tolerance(params.eps_trunc))
        throw ConfigError("evolve: initial field state is not normalized");

    const int n_in = initial.n_max();
    const std::size_t len = static_cast<std::size_t>(n_in) + 2;
    EvolutionParts parts;
    parts.a_zero.assign(len, cplx{});
    parts.b_zero.assign(len, cplx{});
    parts.a_prime.assign(len, cplx{});
    parts.b_prime.assign(len, cplx{});

    auto f = [&](int k) -> cplx {
        return (k >= 0 && k <= n_in) ? initial.amps[k] : cplx{};
    };
    const double w = params.omega_over_g;

    for (int n = 0; n < static_cast<int>(len); ++n) {
        const double rn = std::sqrt(static_cast<double>(n));
        parts.a_zero[n] = -kImagUnit * std::sin(std::sqrt(n + 1.0) * gt) * f(n + 1);
        parts.b_zero[n] = std::cos(rn * gt) * f(n);
        if (params.rwa) continue;

        if (n >= 1 && n - 1 <= n_in) {
            parts.a_prime[n] = 0.5 * rn * f(n - 1) *
                               (phase_integral(k1(n - 1, w), gt) +
                                phase_integral(k2(n - 1, w), gt));
        }
        if (n + 2 <= n_in) {
            // (1 - e^{-iK gt}) / K = conj(phase_integral) for real K, gt
            parts.b_prime[n] = 0.5 * std::sqrt(n + 1.0) * f(n + 2) *
                               (std::conj(phase_integral(k2(n + 2, w), gt)) -
                                std::conj(phase_integral(k1(n + 2, w), gt)));
        }
    }
    return parts;
}

JointState evolve(const JcParams& params, const FockVector& initial, double gt) {
    const EvolutionParts parts = perturbation_parts(params, initial, gt);
    const std::size_t len = parts.a_zero.size();

    JointState state;
    state.gt = gt;
    state.a_amps.resize(len);
    state.b_amps.resize(len);
    for (std::size_t n = 0; n < len; ++n) {
        state.a_amps[n] = parts.a_zero[n] + parts.a_prime[n];
        state.b_amps[n] = parts.b_zero[n] + parts.b_prime[n];
    }

    const double total = state.norm_sq();
    if (total < 1e-300) throw GuardError("evolve: evolved state has zero norm");
    const double c = 1.0 / std::sqrt(total);
    for (cplx& a : state.a_amps) a *= c;
    for (cplx& b : state.b_amps) b *= c;
    return state;
}

double excitation_probability(const JointState& state) {
    double s = 0.0;
    for (const cplx& a : state.a_amps) s += std::norm(a);
    return s;
}

} // namespace jcd
