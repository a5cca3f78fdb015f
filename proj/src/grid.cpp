#include "jcd/grid.hpp"

#include <algorithm>
#include <cmath>

#include "jcd/errors.hpp"

namespace jcd {

void validate(const GridSpec& grid) {
    if (grid.n < 1) throw ConfigError("grid: need at least one point");
    if (grid.n > 1 && !(grid.lo < grid.hi))
        throw ConfigError("grid: min must be below max");
    if (!std::isfinite(grid.lo) || !std::isfinite(grid.hi))
        throw ConfigError("grid: bounds must be finite");
}

std::vector<double> linspace(const GridSpec& grid) {
    validate(grid);
    std::vector<double> xs(static_cast<std::size_t>(grid.n));
    if (grid.n == 1) {
        xs[0] = grid.lo;
        return xs;
    }
    const double step = (grid.hi - grid.lo) / (grid.n - 1);
    for (int i = 0; i < grid.n; ++i) xs[i] = grid.lo + step * i;
    xs.back() = grid.hi;
    return xs;
}

namespace {

// Vertex of the parabola through three points; falls back to xm when the
// points are collinear. Clamped into (xl, xr) by the callers.
bool parabola_vertex(double xl, double xm, double xr, double fl, double fm,
                     double fr, double& x_out, double& f_out) {
    const double d1 = (xm - xl) * (fm - fr);
    const double d2 = (xm - xr) * (fm - fl);
    const double den = d1 - d2;
    if (den == 0.0) return false;
    const double xv = xm - 0.5 * ((xm - xl) * d1 - (xm - xr) * d2) / den;
    // Lagrange evaluation at xv
    const double l0 = (xv - xm) * (xv - xr) / ((xl - xm) * (xl - xr));
    const double l1 = (xv - xl) * (xv - xr) / ((xm - xl) * (xm - xr));
    const double l2 = (xv - xl) * (xv - xm) / ((xr - xl) * (xr - xm));
    x_out = xv;
    f_out = fl * l0 + fm * l1 + fr * l2;
    return true;
}

} // namespace

std::vector<Extremum> find_extrema(std::span<const double> xs,
                                   std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw ConfigError("find_extrema: mismatched row lengths");
    if (xs.size() < 3)
        throw ConfigError("find_extrema: need at least 3 rows");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw ConfigError("find_extrema: rows must be sorted by coordinate");

    std::vector<Extremum> out;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const bool is_max = ys[i] > ys[i - 1] && ys[i] >= ys[i + 1];
        const bool is_min = ys[i] < ys[i - 1] && ys[i] <= ys[i + 1];
        if (!is_max && !is_min) continue;

        Extremum e{is_max ? Extremum::Kind::max : Extremum::Kind::min, xs[i],
                   ys[i]};
        const bool strict = is_max ? ys[i] > ys[i + 1] : ys[i] < ys[i + 1];
        double xv, fv;
        if (strict && parabola_vertex(xs[i - 1], xs[i], xs[i + 1], ys[i - 1],
                                      ys[i], ys[i + 1], xv, fv) &&
            xv > xs[i - 1] && xv < xs[i + 1]) {
            e.location = xv;
            e.value = fv;
        }
        out.push_back(e);
    }
    return out;
}

double refine_max(const std::function<double(double)>& f, double xl, double xm,
                  double xr, double xtol, double& value) {
    if (!(xl < xm && xm < xr)) throw ConfigError("refine_max: bad bracket");
    double fl = f(xl), fm = f(xm), fr = f(xr);

    for (int iter = 0; iter < 200 && (xr - xl) > xtol; ++iter) {
        double xv, fv_est;
        if (!parabola_vertex(xl, xm, xr, fl, fm, fr, xv, fv_est) ||
            !(xv > xl && xv < xr) || std::abs(xv - xm) < 1e-15) {
            // bisect the wider half
            xv = (xm - xl > xr - xm) ? 0.5 * (xl + xm) : 0.5 * (xm + xr);
        }
        const double fv = f(xv);
        if (fv > fm) {
            if (xv < xm) {
                xr = xm;
                fr = fm;
            } else {
                xl = xm;
                fl = fm;
            }
            xm = xv;
            fm = fv;
        } else {
            if (xv < xm) {
                xl = xv;
                fl = fv;
            } else {
                xr = xv;
                fr = fv;
            }
        }
    }
    value = fm;
    return xm;
}

ScanResult scan_maximum(const std::function<double(double)>& f,
                        const GridSpec& grid, double xtol,
                        std::vector<double>* ys_out) {
    const std::vector<double> xs = linspace(grid);
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f(xs[i]);

    std::size_t best = 0;
    for (std::size_t i = 1; i < ys.size(); ++i)
        if (ys[i] > ys[best]) best = i;  // ties keep the smaller coordinate

    ScanResult res{xs[best], ys[best]};
    if (best > 0 && best + 1 < xs.size()) {
        double v;
        const double x =
            refine_max(f, xs[best - 1], xs[best], xs[best + 1], xtol, v);
        if (v >= res.value) res = {x, v};
    }
    if (ys_out) *ys_out = std::move(ys);
    return res;
}

} // namespace jcd
