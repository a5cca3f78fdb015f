#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "jcd/driver.hpp"
#include "jcd/errors.hpp"

using namespace jcd;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

RunConfig quick_ambiguous() {
    RunConfig cfg;
    cfg.mode = Mode::ambiguous_sweep;
    cfg.alpha_sq = 4.0;
    cfg.gt_range = {0.0, 1.0, 201};
    cfg.rwa = RwaMode::both;
    cfg.omega_over_g = {10.0};
    return cfg;
}

} // namespace

TEST_CASE("gt scan finds the known optimum and reports it") {
    RunConfig cfg = quick_ambiguous();
    cfg.rwa = RwaMode::on;
    const SweepResult res = run(cfg);
    CHECK(res.rows.size() == 201);
    REQUIRE(!res.extrema_rows.empty());
    bool found = false;
    for (const SweepRow& e : res.extrema_rows)
        if (e.kind == "max" && std::abs(e.gt - 0.396) < 0.01 &&
            std::abs(2.0 * e.objective - 0.9896) < 2e-3)
            found = true;
    CHECK(found);
    bool reported = false;
    for (const std::string& line : res.report)
        if (line.find("0.9896") != std::string::npos) reported = true;
    CHECK(reported);
}

TEST_CASE("extremum values agree with nearby rows") {
    RunConfig cfg = quick_ambiguous();
    cfg.rwa = RwaMode::on;
    const SweepResult res = run(cfg);
    for (const SweepRow& e : res.extrema_rows) {
        double closest = 1e300;
        double row_val = 0.0;
        for (const SweepRow& r : res.rows) {
            if (std::abs(r.gt - e.gt) < closest) {
                closest = std::abs(r.gt - e.gt);
                row_val = r.objective;
            }
        }
        CHECK(closest <= 0.005 + 1e-12);  // within one grid step
        CHECK(std::abs(row_val - e.objective) < 1e-3);
    }
}

TEST_CASE("identical config produces byte-identical output for any worker count") {
    RunConfig cfg = quick_ambiguous();
    cfg.out_path = "det_a.csv";
    setenv("JCD_THREADS", "1", 1);
    run(cfg);
    const std::string one = slurp("det_a.csv");
    cfg.out_path = "det_b.csv";
    setenv("JCD_THREADS", "4", 1);
    run(cfg);
    const std::string four = slurp("det_b.csv");
    unsetenv("JCD_THREADS");
    CHECK(one == four);
    CHECK(one.rfind("alpha_sq,gt,omega_over_g,rwa,objective,kind\n", 0) == 0);
    std::remove("det_a.csv");
    std::remove("det_b.csv");
}

TEST_CASE("csv written by a run reads back exactly") {
    RunConfig cfg = quick_ambiguous();
    cfg.out_path = "roundtrip.csv";
    const SweepResult res = run(cfg);
    const auto rows = read_csv_file("roundtrip.csv");
    REQUIRE(rows.size() == res.rows.size() + res.extrema_rows.size());
    for (std::size_t i = 0; i < res.rows.size(); ++i)
        CHECK(rows[i] == res.rows[i]);
    std::remove("roundtrip.csv");
}

TEST_CASE("kennedy sweep emits both objectives and the guard skips bad ratios") {
    RunConfig cfg;
    cfg.mode = Mode::kennedy_sweep;
    cfg.alpha_sq_range = {0.5, 2.0, 4};
    cfg.gt_range = {0.0, 2.0, 101};
    cfg.rwa = RwaMode::off;
    cfg.omega_over_g = {10.0};
    cfg.measurements = 2;
    const SweepResult res = run(cfg);
    CHECK(res.rows.size() == 4);
    for (const SweepRow& r : res.rows) {
        CHECK(r.objective > 0.5);  // q_sm can not undercut P2
        CHECK(r.objective <= 1.0);
    }

    // omega/g = 1 violates the denominator guard for every point: the run
    // must survive and report, not die
    cfg.omega_over_g = {1.0};
    CHECK_THROWS_AS(run(cfg), GuardError);
}

TEST_CASE("purity mode keeps both curves in the qubit range") {
    RunConfig cfg;
    cfg.mode = Mode::purity;
    cfg.gt_range = {0.0, 5.0, 101};
    cfg.omega_over_g = {10.0};
    const SweepResult res = run(cfg);
    CHECK(res.rows.size() == 202);  // both rwa modes
    for (const SweepRow& r : res.rows) {
        CHECK(r.objective >= 0.5 - 1e-12);
        CHECK(r.objective <= 1.0 + 1e-12);
        CHECK(r.alpha_sq == 3.56);
    }
}

TEST_CASE("bounds table rows carry the bound labels") {
    RunConfig cfg;
    cfg.mode = Mode::bounds_table;
    cfg.alpha_sq_range = {0.1, 2.0, 5};
    const SweepResult res = run(cfg);
    CHECK(res.rows.size() == 15);
    int helstrom = 0, qutrit = 0, two_level = 0;
    for (const SweepRow& r : res.rows) {
        if (r.kind == "helstrom") ++helstrom;
        if (r.kind == "unamb_qutrit") ++qutrit;
        if (r.kind == "unamb_two_level") ++two_level;
    }
    CHECK(helstrom == 5);
    CHECK(qutrit == 5);
    CHECK(two_level == 5);
}

TEST_CASE("calibrate reports every ratio including guarded ones") {
    RunConfig cfg;
    cfg.mode = Mode::calibrate;
    cfg.alpha_sq = 4.0;
    cfg.gt_range = {0.0, 1.0, 201};
    cfg.omega_over_g = {2.0, 10.0};  // 2 trips the truncation guard
    const SweepResult res = run(cfg);
    CHECK(res.rows.size() == 1);
    bool skipped = false, best = false;
    for (const std::string& line : res.report) {
        if (line.find("omega/g = 2") != std::string::npos &&
            line.find("skipped") != std::string::npos)
            skipped = true;
        if (line.find("best match") != std::string::npos) best = true;
    }
    CHECK(skipped);
    CHECK(best);
}

TEST_CASE("verify mode passes its own cross-checks") {
    RunConfig cfg;
    cfg.mode = Mode::verify;
    const SweepResult res = run(cfg);
    CHECK(res.ok);
}

TEST_CASE("config validation failures throw ConfigError") {
    RunConfig cfg = quick_ambiguous();
    cfg.gt_range = {5.0, 1.0, 100};
    CHECK_THROWS_AS(run(cfg), ConfigError);
    cfg = quick_ambiguous();
    cfg.priors = {0.6, 0.6};
    CHECK_THROWS_AS(run(cfg), ConfigError);
    cfg = quick_ambiguous();
    cfg.omega_over_g = {};
    CHECK_THROWS_AS(run(cfg), ConfigError);
    cfg = quick_ambiguous();
    cfg.measurements = 3;
    CHECK_THROWS_AS(run(cfg), ConfigError);
}
