#include "evohealth/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace evohealth::cli {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fixed(double v, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

// Tick labels: compact general format.
std::string tick(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void widen() {
        if (!std::isfinite(lo)) {
            lo = 0.0;
            hi = 1.0;
        } else if (hi - lo <= 0.0) {
            const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
            lo -= pad;
            hi += pad;
        }
    }
};

}  // namespace

std::string render_svg(const PlotSpec& spec) {
    if (spec.series.empty()) throw std::invalid_argument("nothing to plot");
    for (const auto& s : spec.series) {
        if (s.values.size() != spec.x.size()) throw std::invalid_argument("series length mismatch");
    }

    const double left = 70.0, right = 20.0, top = 40.0, bottom = 50.0;
    const double plot_w = spec.width - left - right;
    const double plot_h = spec.height - top - bottom;

    Range xr, yr;
    for (double v : spec.x) xr.include(v);
    for (const auto& s : spec.series) {
        for (double v : s.values) yr.include(v);
    }
    xr.widen();
    yr.widen();

    auto px = [&](double v) { return left + (v - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    auto py = [&](double v) { return top + plot_h - (v - yr.lo) / (yr.hi - yr.lo) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!spec.title.empty()) {
        svg << "<text x=\"" << fixed(spec.width / 2.0) << "\" y=\"24\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"16\">" << escape(spec.title) << "</text>\n";
    }

    // axes
    svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
    svg << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top + plot_h) << "\" x2=\""
        << fixed(left + plot_w) << "\" y2=\"" << fixed(top + plot_h) << "\"/>\n";
    svg << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(left)
        << "\" y2=\"" << fixed(top + plot_h) << "\"/>\n";
    svg << "</g>\n";

    svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = xr.lo + (xr.hi - xr.lo) * i / 4.0;
        const double yv = yr.lo + (yr.hi - yr.lo) * i / 4.0;
        svg << "<line x1=\"" << fixed(px(xv)) << "\" y1=\"" << fixed(top + plot_h) << "\" x2=\""
            << fixed(px(xv)) << "\" y2=\"" << fixed(top + plot_h + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fixed(px(xv)) << "\" y=\"" << fixed(top + plot_h + 18)
            << "\" text-anchor=\"middle\">" << tick(xv) << "</text>\n";
        svg << "<line x1=\"" << fixed(left - 5) << "\" y1=\"" << fixed(py(yv)) << "\" x2=\""
            << fixed(left) << "\" y2=\"" << fixed(py(yv)) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(py(yv) + 4)
            << "\" text-anchor=\"end\">" << tick(yv) << "</text>\n";
    }
    svg << "<text x=\"" << fixed(left + plot_w / 2.0) << "\" y=\"" << fixed(spec.height - 10.0)
        << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n";
    svg << "</g>\n";

    for (std::size_t k = 0; k < spec.series.size(); ++k) {
        const char* color = kPalette[k % std::size(kPalette)];
        svg << "<polyline class=\"series\" data-name=\"" << escape(spec.series[k].name)
            << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < spec.x.size(); ++i) {
            const double v = spec.series[k].values[i];
            if (!std::isfinite(v) || !std::isfinite(spec.x[i])) continue;
            if (!first) svg << ' ';
            svg << fixed(px(spec.x[i])) << ',' << fixed(py(v));
            first = false;
        }
        svg << "\"/>\n";
    }

    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t k = 0; k < spec.series.size(); ++k) {
        const double ly = top + 12.0 + 16.0 * static_cast<double>(k);
        const double lx = left + plot_w - 120.0;
        svg << "<line x1=\"" << fixed(lx) << "\" y1=\"" << fixed(ly) << "\" x2=\"" << fixed(lx + 20)
            << "\" y2=\"" << fixed(ly) << "\" stroke=\"" << kPalette[k % std::size(kPalette)]
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fixed(lx + 26) << "\" y=\"" << fixed(ly + 4) << "\">"
            << escape(spec.series[k].name) << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace evohealth::cli
