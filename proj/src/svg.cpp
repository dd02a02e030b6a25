#include "hrcsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hrcsim {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void rect(std::ostringstream& o, double x, double y, double w, double h, const std::string& fill,
          const std::string& extra = "") {
    o << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w)
      << "\" height=\"" << fmt(h) << "\" fill=\"" << fill << "\"" << extra << "/>\n";
}

void text(std::ostringstream& o, double x, double y, const std::string& s, int size = 11,
          const std::string& anchor = "start") {
    o << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" font-family=\"sans-serif\" font-size=\""
      << size << "\" text-anchor=\"" << anchor << "\">" << s << "</text>\n";
}

// Blue -> yellow -> red, t in [0,1].
std::string ramp(double t) {
    t = std::clamp(t, 0.0, 1.0);
    auto lerp = [](int a, int b, double u) { return static_cast<int>(a + (b - a) * u + 0.5); };
    int r, g, b;
    if (t < 0.5) {
        const double u = t * 2;
        r = lerp(0x31, 0xfd, u);
        g = lerp(0x49, 0xd8, u);
        b = lerp(0x9d, 0x35, u);
    } else {
        const double u = (t - 0.5) * 2;
        r = lerp(0xfd, 0xd7, u);
        g = lerp(0xd8, 0x30, u);
        b = lerp(0x35, 0x27, u);
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

const char* state_color(StateLabel s) {
    switch (s) {
        case StateLabel::Laying: return "#2e7d32";
        case StateLabel::Moving: return "#a5d6a7";
        case StateLabel::Starved: return "#fdd835";
        case StateLabel::Blocked: return "#e53935";
        case StateLabel::Done: return "#bdbdbd";
        case StateLabel::Working: return "#1565c0";
        case StateLabel::Walking: return "#90caf9";
        case StateLabel::Checking: return "#7e57c2";
        case StateLabel::Fetching: return "#26a69a";
        case StateLabel::Supplying: return "#00897b";
        case StateLabel::Resting: return "#ffb74d";
        case StateLabel::Idle: return "#eeeeee";
    }
    return "#000000";
}

std::string gantt_svg(const StateTimeline& tl) {
    const double left = 90, top = 30, row_h = 22, row_gap = 6, plot_w = 1100;
    const double span = tl.makespan_s > 0 ? tl.makespan_s : 1.0;
    const int n = static_cast<int>(tl.agents.size());
    const double legend_h = 40;
    const double height = top + n * (row_h + row_gap) + 40 + legend_h;
    const double width = left + plot_w + 30;

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    rect(o, 0, 0, width, height, "#ffffff");
    text(o, left, 18, "agent states over time (s), makespan " + fmt(tl.makespan_s), 13);

    auto xof = [&](double t) { return left + t / span * plot_w; };
    for (int a = 0; a < n; ++a) {
        const double y = top + a * (row_h + row_gap);
        text(o, left - 8, y + row_h * 0.7, tl.agents[a].id, 11, "end");
        for (const auto& iv : tl.intervals[a]) {
            const double x0 = xof(iv.start_s), x1 = xof(iv.end_s);
            if (x1 - x0 < 0.05) continue;
            rect(o, x0, y, x1 - x0, row_h, state_color(iv.state));
        }
        rect(o, left, y, plot_w, row_h, "none", " stroke=\"#999999\" stroke-width=\"0.5\"");
    }

    const double axis_y = top + n * (row_h + row_gap) + 4;
    for (int k = 0; k <= 10; ++k) {
        const double t = span * k / 10.0;
        const double x = xof(t);
        o << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(axis_y) << "\" x2=\"" << fmt(x)
          << "\" y2=\"" << fmt(axis_y + 4) << "\" stroke=\"#333333\"/>\n";
        text(o, x, axis_y + 16, fmt(t), 10, "middle");
    }

    const StateLabel all[] = {StateLabel::Laying, StateLabel::Moving, StateLabel::Starved,
                              StateLabel::Blocked, StateLabel::Done, StateLabel::Working,
                              StateLabel::Walking, StateLabel::Checking, StateLabel::Fetching,
                              StateLabel::Supplying, StateLabel::Resting, StateLabel::Idle};
    double lx = left;
    const double ly = axis_y + 30;
    for (StateLabel s : all) {
        rect(o, lx, ly, 12, 12, state_color(s), " stroke=\"#666666\" stroke-width=\"0.5\"");
        text(o, lx + 16, ly + 10, to_string(s), 10);
        lx += 16 + 7.0 * std::string(to_string(s)).size() + 14;
    }
    o << "</svg>\n";
    return o.str();
}

std::string heatmap_svg(const std::string& title, const std::vector<double>& ci,
                        const std::vector<int>& sl, const std::vector<double>& values,
                        const std::string& value_label) {
    const double left = 70, top = 40, cell_w = 46, cell_h = 28;
    const int nc = static_cast<int>(ci.size()), nr = static_cast<int>(sl.size());
    const double plot_w = nc * cell_w, plot_h = nr * cell_h;
    const double width = left + plot_w + 120, height = top + plot_h + 60;

    double lo = 0, hi = 0;
    bool any = false;
    for (double v : values) {
        if (std::isnan(v)) continue;
        if (!any) { lo = hi = v; any = true; }
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!any) { lo = 0; hi = 1; }
    const double range = hi > lo ? hi - lo : 1.0;

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    rect(o, 0, 0, width, height, "#ffffff");
    text(o, left, 20, title, 13);

    for (int r = 0; r < nr; ++r) {
        for (int c = 0; c < nc; ++c) {
            const double v = values[static_cast<std::size_t>(r) * nc + c];
            // Row 0 (smallest SL) at the bottom.
            const double x = left + c * cell_w;
            const double y = top + (nr - 1 - r) * cell_h;
            if (std::isnan(v)) {
                rect(o, x, y, cell_w, cell_h, "#cccccc");
                o << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x + cell_w)
                  << "\" y2=\"" << fmt(y + cell_h) << "\" stroke=\"#888888\"/>\n";
            } else {
                rect(o, x, y, cell_w, cell_h, ramp((v - lo) / range));
            }
        }
    }
    rect(o, left, top, plot_w, plot_h, "none", " stroke=\"#333333\" stroke-width=\"0.7\"");

    for (int c = 0; c < nc; ++c)
        text(o, left + c * cell_w + cell_w / 2, top + plot_h + 14, fmt(ci[c]), 9, "middle");
    text(o, left + plot_w / 2, top + plot_h + 32, "CI (s)", 11, "middle");
    for (int r = 0; r < nr; ++r)
        text(o, left - 6, top + (nr - 1 - r) * cell_h + cell_h * 0.65, std::to_string(sl[r]), 9, "end");
    text(o, 16, top + plot_h / 2, "SL", 11);

    const double bar_x = left + plot_w + 24;
    for (int k = 0; k < 40; ++k) {
        const double t = 1.0 - k / 39.0;
        rect(o, bar_x, top + k * (plot_h / 40.0), 14, plot_h / 40.0 + 0.5, ramp(t));
    }
    text(o, bar_x + 18, top + 10, fmt(hi), 9);
    text(o, bar_x + 18, top + plot_h, fmt(lo), 9);
    text(o, bar_x, top - 8, value_label, 10);
    o << "</svg>\n";
    return o.str();
}

}  // namespace hrcsim
