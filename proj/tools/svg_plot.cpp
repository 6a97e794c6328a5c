#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <sstream>

namespace ionmirror::cli {

namespace {

constexpr int kWidth = 760;
constexpr int kPanelHeight = 340;
constexpr int kLeft = 72;
constexpr int kRight = 24;
constexpr int kTop = 42;
constexpr int kBottom = 52;
constexpr int kTicks = 5;

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
constexpr int kColorCount = 5;

std::string fmt(const char* f, ...)
{
    va_list args;
    va_start(args, f);
    char buf[256];
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void cover(double v)
    {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    // Degenerate or empty ranges widen to something drawable.
    void finalize(double pad_fraction)
    {
        if (lo > hi) {
            lo = 0.0;
            hi = 1.0;
        }
        if (lo == hi) {
            const double pad = (lo == 0.0) ? 1.0 : std::abs(lo) * 0.1;
            lo -= pad;
            hi += pad;
        } else {
            const double pad = (hi - lo) * pad_fraction;
            lo -= pad;
            hi += pad;
        }
    }

    double fraction(double v) const { return (v - lo) / (hi - lo); }
};

void render_panel(std::ostringstream& out, const PlotPanel& panel, int y_offset)
{
    Range xr, yr;
    for (const auto& s : panel.series) {
        for (double v : s.x) xr.cover(v);
        for (double v : s.y) yr.cover(v);
    }
    xr.finalize(0.0);
    yr.finalize(0.05);

    const double x0 = kLeft;
    const double x1 = kWidth - kRight;
    const double y0 = y_offset + kPanelHeight - kBottom; // svg y grows downward
    const double y1 = y_offset + kTop;
    const auto px = [&](double v) { return x0 + xr.fraction(v) * (x1 - x0); };
    const auto py = [&](double v) { return y0 - yr.fraction(v) * (y0 - y1); };

    out << fmt("<text x=\"%d\" y=\"%d\" font-size=\"15\" font-weight=\"bold\">",
               kLeft, y_offset + 22)
        << panel.title << "</text>\n";

    for (int k = 0; k < kTicks; ++k) {
        const double f = double(k) / (kTicks - 1);
        const double gx = x0 + f * (x1 - x0);
        const double gy = y0 - f * (y0 - y1);
        out << fmt("<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                   "stroke=\"#dddddd\"/>\n",
                   gx, y0, gx, y1)
            << fmt("<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                   "stroke=\"#dddddd\"/>\n",
                   x0, gy, x1, gy)
            << fmt("<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" "
                   "text-anchor=\"middle\">%.4g</text>\n",
                   gx, y0 + 16.0, xr.lo + f * (xr.hi - xr.lo))
            << fmt("<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" "
                   "text-anchor=\"end\">%.4g</text>\n",
                   x0 - 6.0, gy + 4.0, yr.lo + f * (yr.hi - yr.lo));
    }
    out << fmt("<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
               "fill=\"none\" stroke=\"#333333\"/>\n",
               x0, y1, x1 - x0, y0 - y1);
    out << fmt("<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"middle\">",
               (x0 + x1) / 2.0, y0 + 36.0)
        << panel.x_label << "</text>\n";
    out << fmt("<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"middle\" "
               "transform=\"rotate(-90 %.1f %.1f)\">",
               x0 - 52.0, (y0 + y1) / 2.0, x0 - 52.0, (y0 + y1) / 2.0)
        << panel.y_label << "</text>\n";

    double legend_x = x1 - 10.0;
    for (std::size_t i = panel.series.size(); i-- > 0;) {
        const auto& s = panel.series[i];
        const char* color = kColors[i % kColorCount];
        legend_x -= 7.0 * double(s.label.size()) + 30.0;
        out << fmt("<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                   "stroke=\"%s\" stroke-width=\"2\"/>\n",
                   legend_x, y1 - 8.0, legend_x + 18.0, y1 - 8.0, color)
            << fmt("<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\">", legend_x + 22.0,
                   y1 - 4.0)
            << s.label << "</text>\n";
    }

    for (std::size_t i = 0; i < panel.series.size(); ++i) {
        const auto& s = panel.series[i];
        const std::size_t count = std::min(s.x.size(), s.y.size());
        if (count == 0) continue;
        out << fmt("<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\" points=\"",
                   kColors[i % kColorCount]);
        for (std::size_t k = 0; k < count; ++k)
            out << fmt("%.2f,%.2f ", px(s.x[k]), py(s.y[k]));
        out << "\"/>\n";
    }
}

} // namespace

std::string render_svg(const std::vector<PlotPanel>& panels)
{
    const int height = kPanelHeight * std::max<int>(1, int(panels.size()));
    std::ostringstream out;
    out << fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
               "viewBox=\"0 0 %d %d\" font-family=\"sans-serif\">\n",
               kWidth, height, kWidth, height);
    out << fmt("<rect width=\"%d\" height=\"%d\" fill=\"white\"/>\n", kWidth, height);
    for (std::size_t i = 0; i < panels.size(); ++i)
        render_panel(out, panels[i], int(i) * kPanelHeight);
    out << "</svg>\n";
    return out.str();
}

} // namespace ionmirror::cli
