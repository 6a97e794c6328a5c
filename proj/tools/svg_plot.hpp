#pragma once

#include <string>
#include <vector>

namespace ionmirror::cli {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotPanel {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
};

/// Render stacked line-plot panels into one static SVG document. The plots
/// are presentation only; nothing downstream parses them back.
std::string render_svg(const std::vector<PlotPanel>& panels);

} // namespace ionmirror::cli
