#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace jcd {

/// Inclusive linear grid: n points from lo to hi.
struct GridSpec {
    double lo = 0.0;
    double hi = 10.0;
    int n = 2001;
};

void validate(const GridSpec& grid);
std::vector<double> linspace(const GridSpec& grid);

struct Extremum {
    enum class Kind { min, max };
    Kind kind;
    double location;
    double value;
};

/// Interior local extrema of sampled rows: points where the discrete slope
/// changes sign, refined by one parabolic interpolation through the three
/// bracketing samples. Endpoints are never reported; on flat ties the
/// smaller coordinate wins. Requires at least 3 rows sorted by x.
std::vector<Extremum> find_extrema(std::span<const double> xs,
                                   std::span<const double> ys);

/// Iteratively sharpen a bracketed maximum of f by parabolic steps with a
/// bisection fallback, until the bracket is narrower than xtol. (xl, xm, xr)
/// must bracket: xl < xm < xr with f(xm) >= f at both ends. Returns the
/// refined location; `value` receives f there.
double refine_max(const std::function<double(double)>& f, double xl, double xm,
                  double xr, double xtol, double& value);

/// Scan f over the grid and refine the global maximum (ties toward smaller
/// x; endpoints returned unrefined). ys, if nonnull, receives the scan.
struct ScanResult {
    double location;
    double value;
};
ScanResult scan_maximum(const std::function<double(double)>& f,
                        const GridSpec& grid, double xtol = 1e-4,
                        std::vector<double>* ys = nullptr);

} // namespace jcd
