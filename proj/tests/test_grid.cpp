#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "jcd/csvio.hpp"
#include "jcd/errors.hpp"
#include "jcd/grid.hpp"
#include "jcd/parallel.hpp"
#include "jcd/svg.hpp"

using namespace jcd;

TEST_CASE("linspace endpoints and spacing") {
    const auto xs = linspace({0.0, 10.0, 2001});
    REQUIRE(xs.size() == 2001);
    CHECK(xs.front() == 0.0);
    CHECK(xs.back() == 10.0);
    CHECK(xs[1] == doctest::Approx(0.005).epsilon(1e-15));
    CHECK(linspace({3.0, 9.0, 1}) == std::vector<double>{3.0});
    CHECK_THROWS_AS(linspace({5.0, 1.0, 10}), ConfigError);
    CHECK_THROWS_AS(linspace({0.0, 1.0, 0}), ConfigError);
}

TEST_CASE("monotone rows have no interior extrema") {
    std::vector<double> xs{0, 1, 2, 3, 4}, ys{0, 1, 2, 3, 4};
    CHECK(find_extrema(xs, ys).empty());
}

TEST_CASE("sampled parabola vertex is recovered") {
    // y = 3 - 2 (x - 1.234)^2 sampled on a coarse grid
    std::vector<double> xs, ys;
    for (int i = 0; i <= 40; ++i) {
        const double x = -1.0 + 0.1 * i;
        xs.push_back(x);
        ys.push_back(3.0 - 2.0 * (x - 1.234) * (x - 1.234));
    }
    const auto ext = find_extrema(xs, ys);
    REQUIRE(ext.size() == 1);
    CHECK(ext[0].kind == Extremum::Kind::max);
    CHECK(std::abs(ext[0].location - 1.234) < 1e-3);
    CHECK(std::abs(ext[0].value - 3.0) < 1e-3);
}

TEST_CASE("plateaus report the smaller coordinate once") {
    std::vector<double> xs{0, 1, 2, 3, 4}, ys{0, 1, 1, 0, -1};
    const auto ext = find_extrema(xs, ys);
    REQUIRE(ext.size() == 1);
    CHECK(ext[0].kind == Extremum::Kind::max);
    CHECK(ext[0].location == 1.0);
    CHECK(ext[0].value == 1.0);
}

TEST_CASE("extrema preconditions") {
    std::vector<double> two{0, 1}, y2{1, 2};
    CHECK_THROWS_AS(find_extrema(two, y2), ConfigError);
    std::vector<double> unsorted{0, 2, 1}, y3{1, 2, 3};
    CHECK_THROWS_AS(find_extrema(unsorted, y3), ConfigError);
}

TEST_CASE("refine_max sharpens an analytic peak") {
    auto f = [](double x) { return std::cos(x - 0.7); };
    double value = 0.0;
    const double x = refine_max(f, 0.0, 0.5, 1.5, 1e-6, value);
    CHECK(std::abs(x - 0.7) < 1e-4);
    CHECK(std::abs(value - 1.0) < 1e-9);
}

TEST_CASE("scan_maximum prefers the smaller coordinate on ties") {
    auto f = [](double x) { return std::sin(x); };  // equal peaks at pi/2 + 2k pi
    const ScanResult r = scan_maximum(f, {0.0, 14.0, 5601}, 1e-6);
    CHECK(std::abs(r.location - 1.5707963) < 1e-3);
}

TEST_CASE("csv round-trip is exact") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<SweepRow> rows;
    for (int i = 0; i < 64; ++i) {
        SweepRow r;
        r.alpha_sq = std::exp(8.0 * uni(rng));
        r.gt = uni(rng) * 10.0;
        r.omega_over_g = 10.0 + uni(rng);
        r.rwa = (i % 2) ? "on" : "off";
        r.objective = uni(rng) * 1e-7;
        r.kind = (i % 10 == 0) ? "max" : "";
        rows.push_back(r);
    }
    std::ostringstream os;
    write_csv(os, rows);
    std::istringstream is(os.str());
    const auto back = read_csv(is);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(back[i] == rows[i]);
}

TEST_CASE("csv rejects malformed input") {
    std::istringstream bad_header("a,b\n");
    CHECK_THROWS_AS(read_csv(bad_header), ConfigError);
    std::istringstream bad_field(
        "alpha_sq,gt,omega_over_g,rwa,objective,kind\n1,2,3,on,x,\n");
    CHECK_THROWS_AS(read_csv(bad_field), ConfigError);
}

TEST_CASE("parallel_for touches every index exactly once") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
    for (int h : hits) CHECK(h == 1);
}

TEST_CASE("svg output is self-contained") {
    PlotSpec spec;
    spec.title = "demo";
    spec.x_label = "x";
    spec.y_label = "y";
    PlotSeries s;
    for (int i = 0; i <= 10; ++i) {
        s.xs.push_back(i);
        s.ys.push_back(i * i);
    }
    s.label = "sq";
    spec.series.push_back(s);
    const std::string svg = render_svg(spec);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("href") == std::string::npos);  // no external assets
    CHECK(svg.find("</svg>") != std::string::npos);
}
