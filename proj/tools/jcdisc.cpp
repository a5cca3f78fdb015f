// jcdisc: coherent-state discrimination sweeps via atom-field interaction.
//
// Subcommands: ambiguous-sweep | kennedy-sweep | purity | bounds-table |
// calibrate | verify. All numeric options may also come from a flat
// key=value config file (--config FILE); command-line flags win.
// Exit codes: 0 success, 2 bad configuration, 3 numerical guard tripped.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jcd/driver.hpp"
#include "jcd/errors.hpp"

namespace {

jcd::GridSpec parse_range(const std::string& text, const char* what) {
    jcd::GridSpec g;
    double lo, hi;
    long n;
    if (std::sscanf(text.c_str(), "%lf:%lf:%ld", &lo, &hi, &n) != 3)
        throw jcd::ConfigError(std::string(what) +
                               ": expected min:max:steps, got '" + text + "'");
    g.lo = lo;
    g.hi = hi;
    g.n = static_cast<int>(n);
    jcd::validate(g);
    return g;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t pos = text.find(',', start);
        const std::string tok =
            text.substr(start, pos == std::string::npos ? pos : pos - start);
        try {
            if (!tok.empty()) out.push_back(std::stod(tok));
        } catch (...) {
            throw jcd::ConfigError(std::string(what) + ": bad number '" + tok +
                                   "'");
        }
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (out.empty())
        throw jcd::ConfigError(std::string(what) + ": empty list");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Discrimination of weak coherent signals through resonant "
        "atom-field interaction: sweeps, bounds, calibration, verification."};
    app.set_config("--config", "",
                   "flat key=value file; command-line flags override");
    app.require_subcommand(1);

    double alpha_sq = -1.0;
    std::string alpha_sq_range = "0.1:5:100";
    std::string gt_range = "0:10:2001";
    std::string omega_list;
    std::string rwa = "both";
    double p1 = 0.5;
    double eps_trunc = 1e-12;
    int measurements = 1;
    std::string field = "2alpha";
    double target_bias = 0.9960;
    double target_gt = 0.3636;
    std::string out_path, plot_path;

    app.add_option("--alpha-sq", alpha_sq,
                   "single working point |alpha|^2 (gt scan)");
    app.add_option("--alpha-sq-range", alpha_sq_range,
                   "sweep range min:max:steps")
        ->capture_default_str();
    app.add_option("--gt-range", gt_range, "gt grid min:max:steps")
        ->capture_default_str();
    app.add_option("--omega-over-g", omega_list,
                   "coupling ratio, or comma list for calibrate (default 20)");
    app.add_option("--rwa", rwa, "on | off | both")->capture_default_str();
    app.add_option("--priors", p1, "prior P1 of the first state; P2 = 1 - P1")
        ->capture_default_str();
    app.add_option("--eps-trunc", eps_trunc,
                   "photon-number tail probability budget")
        ->capture_default_str();
    app.add_option("--measurements", measurements,
                   "kennedy-sweep objective: 1 = q_one, 2 = q_sm")
        ->capture_default_str();
    app.add_option("--field", field,
                   "purity: field the ancilla meets, alpha | 2alpha")
        ->capture_default_str();
    app.add_option("--target-bias", target_bias,
                   "calibrate: target 1-2*p_err")
        ->capture_default_str();
    app.add_option("--target-gt", target_gt, "calibrate: target gt")
        ->capture_default_str();
    app.add_option("--out", out_path, "CSV output path");
    app.add_option("--plot", plot_path, "self-contained SVG output path");

    struct ModeCmd {
        const char* name;
        const char* help;
        jcd::Mode mode;
    };
    const ModeCmd cmds[] = {
        {"ambiguous-sweep",
         "minimum-error discrimination: D(gt) at one alpha_sq, or "
         "p_err_min over an alpha_sq range",
         jcd::Mode::ambiguous_sweep},
        {"kennedy-sweep",
         "displaced-input receiver failure over alpha_sq", jcd::Mode::kennedy_sweep},
        {"purity", "ancilla purity against gt", jcd::Mode::purity},
        {"bounds-table", "ideal bound table over alpha_sq",
         jcd::Mode::bounds_table},
        {"calibrate",
         "scan omega/g for a target optimal working point",
         jcd::Mode::calibrate},
        {"verify", "integrator and perturbation cross-checks", jcd::Mode::verify},
    };
    for (const ModeCmd& c : cmds) app.add_subcommand(c.name, c.help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        jcd::RunConfig cfg;
        for (const ModeCmd& c : cmds)
            if (app.got_subcommand(c.name)) cfg.mode = c.mode;

        if (alpha_sq >= 0.0) cfg.alpha_sq = alpha_sq;
        cfg.alpha_sq_range = parse_range(alpha_sq_range, "--alpha-sq-range");
        cfg.gt_range = parse_range(gt_range, "--gt-range");
        if (!omega_list.empty())
            cfg.omega_over_g = parse_list(omega_list, "--omega-over-g");
        else if (cfg.mode == jcd::Mode::calibrate)
            cfg.omega_over_g = {2.0, 5.0, 10.0, 20.0, 50.0, 100.0};
        else
            cfg.omega_over_g = {20.0};

        if (rwa == "on")
            cfg.rwa = jcd::RwaMode::on;
        else if (rwa == "off")
            cfg.rwa = jcd::RwaMode::off;
        else if (rwa == "both")
            cfg.rwa = jcd::RwaMode::both;
        else
            throw jcd::ConfigError("--rwa must be on, off or both");

        cfg.priors = {p1, 1.0 - p1};
        cfg.eps_trunc = eps_trunc;
        cfg.measurements = measurements;
        cfg.purity_field = field;
        cfg.target_bias = target_bias;
        cfg.target_gt = target_gt;
        cfg.out_path = out_path;
        cfg.plot_path = plot_path;

        const jcd::SweepResult res = jcd::run(cfg);
        for (const std::string& line : res.report) std::cout << line << '\n';
        if (!out_path.empty())
            std::cout << "wrote " << res.rows.size() + res.extrema_rows.size()
                      << " rows to " << out_path << '\n';
        if (!res.ok) return 3;
        return 0;
    } catch (const jcd::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const jcd::GuardError& e) {
        std::cerr << "numerical guard: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
