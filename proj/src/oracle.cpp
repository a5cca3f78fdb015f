#include "jcd/oracle.hpp"

#include <cmath>
#include <iostream>

#include "jcd/errors.hpp"

namespace jcd {

double max_stable_dt(double omega_over_g) {
    return std::min(1e-3, 0.1 / (2.0 * omega_over_g));
}

namespace {

// Right-hand side of the truncated equations of motion at time tau = gt.
// A and B have length n_max + 1; dA, dB are overwritten.
struct Rhs {
    double omega_over_g;
    bool rwa_integrand;
    std::vector<double> root;  // sqrt(n) cache

    explicit Rhs(int n_max, double w, bool rwa)
        : omega_over_g(w), rwa_integrand(rwa),
          root(static_cast<std::size_t>(n_max) + 2) {
        for (std::size_t n = 0; n < root.size(); ++n)
            root[n] = std::sqrt(static_cast<double>(n));
    }

    void operator()(const std::vector<cplx>& a, const std::vector<cplx>& b,
                    double tau, std::vector<cplx>& da,
                    std::vector<cplx>& db) const {
        const std::size_t len = a.size();
        const cplx i{0.0, 1.0};
        cplx e_plus{}, e_minus{};
        if (!rwa_integrand) {
            e_plus = std::exp(i * (2.0 * omega_over_g * tau));
            e_minus = std::conj(e_plus);
        }
        for (std::size_t n = 0; n < len; ++n) {
            cplx sa = (n + 1 < len) ? b[n + 1] * root[n + 1] : cplx{};
            cplx sb = (n >= 1) ? a[n - 1] * root[n] : cplx{};
            if (!rwa_integrand) {
                if (n >= 1) sa += b[n - 1] * root[n] * e_plus;
                if (n + 1 < len) sb += a[n + 1] * root[n + 1] * e_minus;
            }
            da[n] = -i * sa;
            db[n] = -i * sb;
        }
    }
};

double joint_norm_sq(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double s = 0.0;
    for (const cplx& x : a) s += std::norm(x);
    for (const cplx& x : b) s += std::norm(x);
    return s;
}

} // namespace

JointState integrate(const JcParams& params, const FockVector& initial,
                     double gt_end, const OdeConfig& cfg) {
    validate(params.priors);
    if (!(params.omega_over_g > 0.0))
        throw ConfigError("integrate: omega_over_g must be > 0");
    if (gt_end < 0.0) throw ConfigError("integrate: gt_end must be >= 0");
    if (std::abs(initial.norm_sq() - 1.0) >
        std::max(1e-10, 10.0 * params.eps_trunc))
        throw ConfigError("integrate: initial field state is not normalized");

    const double dt_cap = max_stable_dt(params.omega_over_g);
    double dt = cfg.dt > 0.0 ? cfg.dt : dt_cap;
    if (dt > dt_cap * (1.0 + 1e-12))
        throw ConfigError("integrate: dt exceeds the phase-resolution bound");

    const std::size_t len = initial.amps.size();
    std::vector<cplx> a(len, cplx{}), b = initial.amps;
    const Rhs rhs(initial.n_max(), params.omega_over_g, cfg.rwa_integrand);

    const long steps =
        gt_end > 0.0 ? static_cast<long>(std::ceil(gt_end / dt - 1e-12)) : 0;
    const double h = steps > 0 ? gt_end / static_cast<double>(steps) : 0.0;

    std::vector<cplx> k1a(len), k1b(len), k2a(len), k2b(len), k3a(len),
        k3b(len), k4a(len), k4b(len), ta(len), tb(len);

    double tau = 0.0;
    for (long s = 0; s < steps; ++s) {
        rhs(a, b, tau, k1a, k1b);
        for (std::size_t n = 0; n < len; ++n) {
            ta[n] = a[n] + 0.5 * h * k1a[n];
            tb[n] = b[n] + 0.5 * h * k1b[n];
        }
        rhs(ta, tb, tau + 0.5 * h, k2a, k2b);
        for (std::size_t n = 0; n < len; ++n) {
            ta[n] = a[n] + 0.5 * h * k2a[n];
            tb[n] = b[n] + 0.5 * h * k2b[n];
        }
        rhs(ta, tb, tau + 0.5 * h, k3a, k3b);
        for (std::size_t n = 0; n < len; ++n) {
            ta[n] = a[n] + h * k3a[n];
            tb[n] = b[n] + h * k3b[n];
        }
        rhs(ta, tb, tau + h, k4a, k4b);
        for (std::size_t n = 0; n < len; ++n) {
            a[n] += h / 6.0 * (k1a[n] + 2.0 * k2a[n] + 2.0 * k3a[n] + k4a[n]);
            b[n] += h / 6.0 * (k1b[n] + 2.0 * k2b[n] + 2.0 * k3b[n] + k4b[n]);
        }
        tau = (s + 1 == steps) ? gt_end : tau + h;

        const double drift = std::abs(joint_norm_sq(a, b) - 1.0);
        if (cfg.stats)
            cfg.stats->max_norm_drift = std::max(cfg.stats->max_norm_drift, drift);
        if (drift > 1e-6)
            throw GuardError("integrate: norm drift beyond 1e-6, aborting");
        if (drift > 1e-8) {
            std::cerr << "integrate: warning: norm drift " << drift
                      << " at gt = " << tau << ", renormalizing\n";
            const double c = 1.0 / std::sqrt(joint_norm_sq(a, b));
            for (cplx& x : a) x *= c;
            for (cplx& x : b) x *= c;
            if (cfg.stats) ++cfg.stats->renormalizations;
        }
    }

    JointState out;
    out.gt = gt_end;
    out.a_amps = std::move(a);
    out.b_amps = std::move(b);
    return out;
}

double state_distance(const JointState& a, const JointState& b) {
    const std::size_t len =
        std::max(std::max(a.a_amps.size(), b.a_amps.size()),
                 std::max(a.b_amps.size(), b.b_amps.size()));
    auto at = [](const std::vector<cplx>& v, std::size_t i) {
        return i < v.size() ? v[i] : cplx{};
    };
    double s = 0.0;
    for (std::size_t n = 0; n < len; ++n) {
        s += std::norm(at(a.a_amps, n) - at(b.a_amps, n));
        s += std::norm(at(a.b_amps, n) - at(b.b_amps, n));
    }
    return std::sqrt(s);
}

} // namespace jcd
