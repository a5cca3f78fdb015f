#include "jcd/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "jcd/errors.hpp"

namespace jcd {

namespace {

constexpr double kWidth = 860, kHeight = 540;
constexpr double kLeft = 72, kRight = 24, kTop = 40, kBottom = 56;

const char* kPalette[] = {"#1f6fb2", "#c23b22", "#2e8b57",
                          "#8a2be2", "#d4820a", "#444444"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// round the raw interval to a 1/2/5 tick step
double nice_step(double span) {
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    double step = 10.0;
    if (frac <= 1.5)
        step = 1.0;
    else if (frac <= 3.5)
        step = 2.0;
    else if (frac <= 7.5)
        step = 5.0;
    return step * mag;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const PlotSpec& spec) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const PlotSeries& s : spec.series) {
        for (std::size_t i = 0; i < std::min(s.xs.size(), s.ys.size()); ++i) {
            if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
            xmin = std::min(xmin, s.xs[i]);
            xmax = std::max(xmax, s.xs[i]);
            ymin = std::min(ymin, s.ys[i]);
            ymax = std::max(ymax, s.ys[i]);
        }
    }
    if (!(xmin < xmax)) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (!(ymin < ymax)) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double ypad = 0.04 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
       << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
       << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"16\">"
       << escape(spec.title) << "</text>\n";

    // frame
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
       << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"1\"/>\n";

    const double xstep = nice_step(xmax - xmin);
    for (double t = std::ceil(xmin / xstep) * xstep; t <= xmax + 1e-12;
         t += xstep) {
        os << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(kTop)
           << "\" x2=\"" << num(px(t)) << "\" y2=\"" << num(kTop + ph)
           << "\" stroke=\"#ddd\" stroke-width=\"0.6\"/>\n";
        os << "<text x=\"" << num(px(t)) << "\" y=\"" << num(kTop + ph + 18)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
              "font-size=\"11\">"
           << num(t) << "</text>\n";
    }
    const double ystep = nice_step(ymax - ymin);
    for (double t = std::ceil(ymin / ystep) * ystep; t <= ymax + 1e-12;
         t += ystep) {
        os << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(t))
           << "\" x2=\"" << num(kLeft + pw) << "\" y2=\"" << num(py(t))
           << "\" stroke=\"#ddd\" stroke-width=\"0.6\"/>\n";
        os << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(t) + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
              "font-size=\"11\">"
           << num(t) << "</text>\n";
    }

    os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"13\">"
       << escape(spec.x_label) << "</text>\n";
    os << "<text x=\"18\" y=\"" << kTop + ph / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"13\" transform=\"rotate(-90 18 "
       << kTop + ph / 2 << ")\">" << escape(spec.y_label) << "</text>\n";

    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const PlotSeries& s = spec.series[si];
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(*kPalette))];
        os << "<polyline fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.6\"";
        if (s.dashed) os << " stroke-dasharray=\"6 4\"";
        os << " points=\"";
        for (std::size_t i = 0; i < std::min(s.xs.size(), s.ys.size()); ++i) {
            if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
            os << num(px(s.xs[i])) << ',' << num(py(s.ys[i])) << ' ';
        }
        os << "\"/>\n";
        // legend
        const double ly = kTop + 16 + 18 * static_cast<double>(si);
        os << "<line x1=\"" << kLeft + pw - 150 << "\" y1=\"" << ly
           << "\" x2=\"" << kLeft + pw - 122 << "\" y2=\"" << ly
           << "\" stroke=\"" << color << "\" stroke-width=\"2\""
           << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
        os << "<text x=\"" << kLeft + pw - 116 << "\" y=\"" << ly + 4
           << "\" font-family=\"sans-serif\" font-size=\"12\">"
           << escape(s.label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_svg_file(const std::string& path, const PlotSpec& spec) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("svg: cannot open for writing: " + path);
    os << render_svg(spec);
    if (!os.good()) throw ConfigError("svg: write failed: " + path);
}

} // namespace jcd
