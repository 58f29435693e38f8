#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cts {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // sorted by x
};

// Minimal static line chart; returns the SVG document.
std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<PlotSeries>& series);

}  // namespace cts
