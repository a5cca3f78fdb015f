#pragma once

#include <string>
#include <vector>

namespace jcd {

struct PlotSeries {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
    bool dashed = false;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
};

/// Self-contained SVG line plot (inline styling, no external assets).
std::string render_svg(const PlotSpec& spec);
void write_svg_file(const std::string& path, const PlotSpec& spec);

} // namespace jcd
