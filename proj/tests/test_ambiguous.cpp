#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jcd/ambiguous.hpp"
#include "jcd/errors.hpp"

using namespace jcd;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("equal priors give zero bias at gt = 0") {
    const JcParams p = make_params(1.0, 20.0, false);
    CHECK(std::abs(trace_distance_optimal(p, 0.0)) < 1e-12);
    CHECK(std::abs(trace_distance(p, 0.0, {1.0, kPi / 2})) < 1e-12);
}

TEST_CASE("closed-form optimum dominates the measurement grid") {
    for (bool rwa : {true, false}) {
        const JcParams p = make_params(2.0, 20.0, rwa);
        const double gt = 0.3960;
        const double d_opt = trace_distance_optimal(p, gt);
        double best = -1.0, best_r = 0.0, best_theta = 0.0;
        for (int ir = 0; ir < 100; ++ir) {
            const double r = 4.0 * ir / 99.0;
            for (int it = 0; it < 100; ++it) {
                const double theta = -kPi + 2.0 * kPi * it / 99.0;
                const double d = trace_distance(p, gt, {r, theta});
                CHECK(d <= d_opt + 1e-10);
                if (d > best) {
                    best = d;
                    best_r = r;
                    best_theta = theta;
                }
            }
        }
        // argmax lands on |r| = 1 within one grid step; theta sits at +-pi/2
        // up to the first-order phase displacement O(g/omega) the
        // counter-rotating terms put on the coherence
        CHECK(std::abs(best_r - 1.0) <= 4.0 / 99.0);
        const double theta_slack = rwa ? 0.0 : 1.5 / 20.0;
        CHECK(std::abs(std::abs(best_theta) - kPi / 2) <=
              2.0 * kPi / 99.0 + theta_slack);
        CHECK(d_opt - best <= 2e-3);  // grid resolution gap only
    }
}

TEST_CASE("theta sign symmetry") {
    const double gt = 0.3960;
    SUBCASE("exchange-only states: exact") {
        const JcParams p = make_params(2.0, 20.0, true);
        for (double r : {0.3, 1.0, 2.5})
            for (double th : {0.2, 0.9, 1.6, 2.8})
                CHECK(trace_distance(p, gt, {r, th}) ==
                      doctest::Approx(trace_distance(p, gt, {r, -th}))
                          .epsilon(1e-12));
    }
    SUBCASE("with counter-rotating corrections: exact on the optimal axis") {
        const JcParams p = make_params(2.0, 10.0, false);
        CHECK(trace_distance(p, gt, {1.0, kPi / 2}) ==
              doctest::Approx(trace_distance(p, gt, {1.0, -kPi / 2}))
                  .epsilon(1e-12));
    }
}

TEST_CASE("exchange-only optimum reproduces the published working point") {
    // max_t of the optimal bias at alpha = 2: 1 - 2 p_err = 0.9896 at
    // gt = 0.3960
    const JcParams p = make_params(2.0, 20.0, true);
    const MinErrorResult res = min_error_probability(p, {0.0, 10.0, 2001});
    CHECK(std::abs(1.0 - 2.0 * res.p_err_min - 0.9896) < 1e-3);
    CHECK(std::abs(res.gt_star - 0.3960) < 0.01);
    // the fixed measurement (r = 1, theta = pi/2) attains the same optimum
    const double d_fixed = trace_distance(p, res.gt_star, {1.0, kPi / 2});
    CHECK(std::abs(d_fixed - (0.5 - res.p_err_min)) < 1e-10);
    CHECK(d_fixed == doctest::Approx(0.49478).epsilon(5e-4));
}

TEST_CASE("error landscape over alpha_sq, exchange-only") {
    auto perr_at = [](double alpha_sq) {
        const JcParams p = make_params(std::sqrt(alpha_sq), 20.0, true);
        return min_error_probability(p, {0.0, 10.0, 2001});
    };
    const MinErrorResult at_165 = perr_at(1.65);
    CHECK(std::abs(at_165.p_err_min - 0.0118) < 0.002);
    CHECK(std::abs(at_165.gt_star - 8.43) < 0.1);
    const MinErrorResult at_115 = perr_at(1.15);
    CHECK(std::abs(at_115.p_err_min - 0.0069) < 0.002);
    CHECK(std::abs(at_115.gt_star - 8.35) < 0.1);
}

TEST_CASE("physical error never beats the ideal bound") {
    for (bool rwa : {true, false}) {
        for (double a : {0.5, 1.0, 1.5, 2.0}) {
            const JcParams p = make_params(a, 10.0, rwa);
            const MinErrorResult res =
                min_error_probability(p, {0.0, 10.0, 501});
            const double ideal =
                helstrom_bound(p.priors, std::exp(-2.0 * a * a));
            CHECK(res.p_err_min >= ideal - 1e-8);
        }
    }
}

TEST_CASE("helstrom bound closed form") {
    CHECK(helstrom_bound({0.5, 0.5}, 0.0) == 0.0);
    CHECK(helstrom_bound({0.5, 0.5}, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    const double s = std::exp(-2.0);
    const double expect = 0.5 * (1.0 - std::sqrt(1.0 - std::exp(-4.0)));
    CHECK(helstrom_bound({0.5, 0.5}, s) ==
          doctest::Approx(expect).epsilon(1e-14));
    CHECK(helstrom_bound({0.5, 0.5}, s) == doctest::Approx(0.004595).epsilon(1e-3));
    CHECK_THROWS_AS(helstrom_bound({0.5, 0.5}, 1.5), ConfigError);
}

TEST_CASE("unequal priors subtract the bias offset") {
    const Priors pr{0.7, 0.3};
    JcParams p = make_params(1.0, 20.0, true, pr);
    // at gt = 0 both reduced states are |g><g|: Tr Pi M spans
    // [min eig, max eig] = P1 - P2 on the g-axis, so D = (P1-P2)/2... the
    // offset cancels the prior imbalance exactly
    const double d0 = trace_distance_optimal(p, 0.0);
    CHECK(std::abs(d0 - 0.2) < 1e-12);  // |P1 - P2| - |P1 - P2|/2
}
