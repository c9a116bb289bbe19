#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jcsim::cli {

struct Series {
    std::string label;
    std::string color;
    // Points with a NaN y break the polyline.
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotPanel {
    std::string y_label;
    std::vector<Series> series;
};

/// Stacked line-plot panels sharing the x axis.
void write_line_plot(std::ostream& os, const std::string& title, const std::string& x_label,
                     const std::vector<PlotPanel>& panels);

/// Vertical bars at integer positions.
void write_bar_chart(std::ostream& os, const std::string& title, const std::vector<double>& heights);

}  // namespace jcsim::cli
