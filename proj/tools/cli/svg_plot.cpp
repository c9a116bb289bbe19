#include "cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace jcsim::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kPanelHeight = 260.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kGap = 50.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void settle() {
        if (!(lo <= hi)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo < 1e-12) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
};

}  // namespace

void write_line_plot(std::ostream& os, const std::string& title, const std::string& x_label,
                     const std::vector<PlotPanel>& panels) {
    Range xr;
    for (const auto& p : panels) {
        for (const auto& s : p.series) {
            for (double x : s.x) {
                xr.add(x);
            }
        }
    }
    xr.settle();
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double height = kMarginTop + panels.size() * (kPanelHeight + kGap) + 10.0;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
       << num(height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(kWidth / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
       << title << "</text>\n";

    for (std::size_t pi = 0; pi < panels.size(); ++pi) {
        const auto& panel = panels[pi];
        Range yr;
        for (const auto& s : panel.series) {
            for (double y : s.y) {
                yr.add(y);
            }
        }
        yr.settle();
        const double top = kMarginTop + pi * (kPanelHeight + kGap);
        const auto sx = [&](double x) { return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
        const auto sy = [&](double y) { return top + kPanelHeight - (y - yr.lo) / (yr.hi - yr.lo) * kPanelHeight; };

        os << "<rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(top) << "\" width=\"" << num(plot_w)
           << "\" height=\"" << num(kPanelHeight) << "\" fill=\"none\" stroke=\"black\"/>\n";
        for (int t = 0; t <= 4; ++t) {
            const double yv = yr.lo + (yr.hi - yr.lo) * t / 4.0;
            const double xv = xr.lo + (xr.hi - xr.lo) * t / 4.0;
            os << "<text x=\"" << num(kMarginLeft - 6) << "\" y=\"" << num(sy(yv) + 4)
               << "\" text-anchor=\"end\">" << tick(yv) << "</text>\n";
            os << "<text x=\"" << num(sx(xv)) << "\" y=\"" << num(top + kPanelHeight + 16)
               << "\" text-anchor=\"middle\">" << tick(xv) << "</text>\n";
        }
        os << "<text x=\"14\" y=\"" << num(top + kPanelHeight / 2) << "\" transform=\"rotate(-90 14 "
           << num(top + kPanelHeight / 2) << ")\" text-anchor=\"middle\">" << panel.y_label << "</text>\n";
        os << "<text x=\"" << num(kMarginLeft + plot_w / 2) << "\" y=\"" << num(top + kPanelHeight + 32)
           << "\" text-anchor=\"middle\">" << x_label << "</text>\n";

        for (std::size_t si = 0; si < panel.series.size(); ++si) {
            const auto& s = panel.series[si];
            std::string points;
            const auto flush = [&] {
                if (!points.empty()) {
                    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\""
                       << points << "\"/>\n";
                    points.clear();
                }
            };
            for (std::size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
                if (!std::isfinite(s.y[k])) {
                    flush();
                    continue;
                }
                points += num(sx(s.x[k])) + "," + num(sy(s.y[k])) + " ";
            }
            flush();
            os << "<text x=\"" << num(kMarginLeft + plot_w - 8) << "\" y=\"" << num(top + 16 + 15 * si)
               << "\" text-anchor=\"end\" fill=\"" << s.color << "\">" << s.label << "</text>\n";
        }
    }
    os << "</svg>\n";
}

void write_bar_chart(std::ostream& os, const std::string& title, const std::vector<double>& heights) {
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double top = kMarginTop;
    double hmax = 0.0;
    for (double h : heights) {
        hmax = std::max(hmax, h);
    }
    if (hmax <= 0.0) {
        hmax = 1.0;
    }
    const double n = std::max<double>(1.0, static_cast<double>(heights.size()));
    const double bar_w = plot_w / n;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
       << num(top + kPanelHeight + 50) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(kWidth / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
       << title << "</text>\n";
    os << "<rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(top) << "\" width=\"" << num(plot_w)
       << "\" height=\"" << num(kPanelHeight) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (std::size_t k = 0; k < heights.size(); ++k) {
        if (heights[k] <= 0.0) {
            continue;
        }
        const double h = heights[k] / hmax * kPanelHeight;
        os << "<rect x=\"" << num(kMarginLeft + k * bar_w) << "\" y=\"" << num(top + kPanelHeight - h)
           << "\" width=\"" << num(std::max(bar_w * 0.8, 0.5)) << "\" height=\"" << num(h)
           << "\" fill=\"steelblue\"/>\n";
    }
    for (int t = 0; t <= 4; ++t) {
        const double nv = (heights.empty() ? 0.0 : heights.size() - 1.0) * t / 4.0;
        os << "<text x=\"" << num(kMarginLeft + (nv + 0.4) * bar_w) << "\" y=\""
           << num(top + kPanelHeight + 16) << "\" text-anchor=\"middle\">" << tick(std::round(nv))
           << "</text>\n";
        const double pv = hmax * t / 4.0;
        os << "<text x=\"" << num(kMarginLeft - 6) << "\" y=\"" << num(top + kPanelHeight - pv / hmax * kPanelHeight + 4)
           << "\" text-anchor=\"end\">" << tick(pv) << "</text>\n";
    }
    os << "<text x=\"" << num(kMarginLeft + plot_w / 2) << "\" y=\"" << num(top + kPanelHeight + 34)
       << "\" text-anchor=\"middle\">n</text>\n";
    os << "</svg>\n";
}

}  // namespace jcsim::cli
