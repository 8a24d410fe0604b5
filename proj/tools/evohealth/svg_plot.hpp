#pragma once

#include <string>
#include <vector>

namespace evohealth::cli {

struct Series {
    std::string name;
    std::vector<double> values;
};

struct PlotSpec {
    std::string title;
    std::string x_label = "t";
    std::vector<double> x;
    std::vector<Series> series;
    int width = 800;
    int height = 480;
};

// Standalone SVG line chart: linear axes with five ticks each, one polyline per
// series, legend in the top-right. Output depends only on the PlotSpec argument.
std::string render_svg(const PlotSpec& spec);

}  // namespace evohealth::cli
