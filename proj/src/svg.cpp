#include "corrgraph/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace corrgraph {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string curve_svg(const CurveTable& table) {
    const double width = 800.0, height = 600.0;
    const double ml = 70.0, mr = 30.0, mt = 40.0, mb = 60.0;
    const double plot_w = width - ml - mr, plot_h = height - mt - mb;

    double ymax = 1.0;
    for (const auto& [fn, vals] : table.values)
        for (double v : vals)
            if (!std::isnan(v)) ymax = std::max(ymax, v);
    ymax *= 1.05;

    auto px = [&](double t) { return ml + t * plot_w; };
    auto py = [&](double y) { return mt + (1.0 - y / ymax) * plot_h; };

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
        "font-family=\"sans-serif\" font-size=\"13\">\n";
    svg += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";

    // Shaded band between f_vect and f_q_upper over the certified interval.
    auto vect = table.values.find(CurveFn::vect);
    auto qup = table.values.find(CurveFn::q_upper);
    if (vect != table.values.end() && qup != table.values.end()) {
        std::string upper, lower;
        for (std::size_t i = 0; i < table.grid.size(); ++i) {
            double t = table.grid[i];
            if (t < kMarginalIntervalLo - 1e-9 || t > kMarginalIntervalHi + 1e-9) continue;
            double a = qup->second[i], b = vect->second[i];
            if (std::isnan(a) || std::isnan(b)) continue;
            upper += num(px(t)) + "," + num(py(a)) + " ";
        }
        for (std::size_t k = table.grid.size(); k-- > 0;) {
            double t = table.grid[k];
            if (t < kMarginalIntervalLo - 1e-9 || t > kMarginalIntervalHi + 1e-9) continue;
            double a = qup->second[k], b = vect->second[k];
            if (std::isnan(a) || std::isnan(b)) continue;
            lower += num(px(t)) + "," + num(py(b)) + " ";
        }
        if (!upper.empty() && !lower.empty())
            svg += "<polygon points=\"" + upper + lower +
                   "\" fill=\"#d0a0ff\" fill-opacity=\"0.45\" stroke=\"none\"/>\n";
    }

    // Axes and ticks.
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt + plot_h) + "\" x2=\"" + num(ml + plot_w) +
           "\" y2=\"" + num(mt + plot_h) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(ml) + "\" y2=\"" +
           num(mt + plot_h) + "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 5; ++k) {
        double t = 0.2 * k;
        svg += "<line x1=\"" + num(px(t)) + "\" y1=\"" + num(mt + plot_h) + "\" x2=\"" + num(px(t)) +
               "\" y2=\"" + num(mt + plot_h + 6) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(px(t)) + "\" y=\"" + num(mt + plot_h + 22) +
               "\" text-anchor=\"middle\">" + num(t) + "</text>\n";
        double y = ymax * k / 5.0;
        svg += "<line x1=\"" + num(ml - 6) + "\" y1=\"" + num(py(y)) + "\" x2=\"" + num(ml) +
               "\" y2=\"" + num(py(y)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(ml - 10) + "\" y=\"" + num(py(y) + 4) +
               "\" text-anchor=\"end\">" + num(y) + "</text>\n";
    }
    svg += "<text x=\"" + num(ml + plot_w / 2) + "\" y=\"" + num(height - 14) +
           "\" text-anchor=\"middle\">t</text>\n";
    svg += "<text x=\"" + num(ml + plot_w / 2) + "\" y=\"24\" text-anchor=\"middle\">" +
           table.graph_name + "</text>\n";

    const struct {
        CurveFn fn;
        const char* color;
    } series[] = {{CurveFn::ns, "#1f77b4"},
                  {CurveFn::loc, "#d62728"},
                  {CurveFn::vect, "#2ca02c"},
                  {CurveFn::q_upper, "#9467bd"}};
    double legend_y = mt + 10.0;
    for (const auto& s : series) {
        auto it = table.values.find(s.fn);
        if (it == table.values.end()) continue;
        std::string pts;
        for (std::size_t i = 0; i < table.grid.size(); ++i) {
            if (std::isnan(it->second[i])) continue;
            pts += num(px(table.grid[i])) + "," + num(py(it->second[i])) + " ";
        }
        if (pts.empty()) continue;
        svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.8\"/>\n";
        svg += "<line x1=\"" + num(ml + 12) + "\" y1=\"" + num(legend_y) + "\" x2=\"" +
               num(ml + 40) + "\" y2=\"" + num(legend_y) + "\" stroke=\"" + s.color +
               "\" stroke-width=\"1.8\"/>\n";
        svg += "<text x=\"" + num(ml + 46) + "\" y=\"" + num(legend_y + 4) + "\">" +
               to_string(s.fn) + "</text>\n";
        legend_y += 18.0;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace corrgraph
