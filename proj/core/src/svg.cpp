#include "zigzag/svg.hpp"

#include <algorithm>
#include <sstream>

namespace zigzag {

namespace {

double coord_of(const Barcode& bc, int index) {
    for (const auto& g : bc.grid)
        if (g.index == index) {
            try {
                return std::stod(g.label);
            } catch (...) {
                return index;
            }
        }
    return index;
}

const char* palette(std::optional<int> dim) {
    static const char* colors[] = {"#3b6ea5", "#c14b3a", "#3d8a4e", "#8a5ca0", "#b58a2c"};
    if (!dim) return colors[0];
    return colors[*dim % 5];
}

}  // namespace

std::string render_figure(const Barcode& bc, FigureStyle style) {
    Barcode sorted = bc;
    sorted.canonicalize();

    double lo = 1, hi = 1;
    bool have = false;
    for (const auto& g : sorted.grid) {
        double x = coord_of(sorted, g.index);
        lo = have ? std::min(lo, x) : x;
        hi = have ? std::max(hi, x) : x;
        have = true;
    }
    for (const auto& e : sorted.entries) {
        lo = have ? std::min(lo, coord_of(sorted, e.iv.b)) : coord_of(sorted, e.iv.b);
        hi = std::max(hi, coord_of(sorted, e.iv.d));
        have = true;
    }
    double span = hi > lo ? hi - lo : 1;

    std::ostringstream out;
    const double margin = 42;

    if (style == FigureStyle::Barcode) {
        long bars = sorted.total();
        double plot_w = 520, row_h = 16;
        double height = margin + std::max<double>(bars * row_h, row_h) + margin / 2;
        double width = plot_w + 2 * margin;
        auto x = [&](double v) { return margin + (v - lo) / span * plot_w; };

        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
            << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
        double axis_y = height - margin / 2;
        out << "  <line class=\"axis\" x1=\"" << margin << "\" y1=\"" << axis_y << "\" x2=\""
            << margin + plot_w << "\" y2=\"" << axis_y << "\" stroke=\"#444\"/>\n";
        for (const auto& g : sorted.grid) {
            double gx = x(coord_of(sorted, g.index));
            out << "  <line class=\"tick\" x1=\"" << gx << "\" y1=\"" << axis_y - 3
                << "\" x2=\"" << gx << "\" y2=\"" << axis_y + 3 << "\" stroke=\"#444\"/>\n";
            out << "  <text x=\"" << gx << "\" y=\"" << axis_y + 16
                << "\" font-size=\"11\" text-anchor=\"middle\">" << g.label << "</text>\n";
        }
        long row = 0;
        for (const auto& e : sorted.entries)
            for (long c = 0; c < e.mult; ++c) {
                double y = margin / 2 + row * row_h + row_h / 2;
                out << "  <line class=\"bar\" x1=\"" << x(coord_of(sorted, e.iv.b))
                    << "\" y1=\"" << y << "\" x2=\"" << x(coord_of(sorted, e.iv.d))
                    << "\" y2=\"" << y << "\" stroke=\"" << palette(e.dim)
                    << "\" stroke-width=\"5\" stroke-linecap=\"round\"/>\n";
                ++row;
            }
        out << "</svg>\n";
    } else {
        double plot = 420;
        double width = plot + 2 * margin, height = plot + 2 * margin;
        auto x = [&](double v) { return margin + (v - lo) / span * plot; };
        auto y = [&](double v) { return margin + plot - (v - lo) / span * plot; };

        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
            << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
        out << "  <line class=\"axis\" x1=\"" << margin << "\" y1=\"" << margin + plot
            << "\" x2=\"" << margin + plot << "\" y2=\"" << margin + plot
            << "\" stroke=\"#444\"/>\n";
        out << "  <line class=\"axis\" x1=\"" << margin << "\" y1=\"" << margin + plot
            << "\" x2=\"" << margin << "\" y2=\"" << margin << "\" stroke=\"#444\"/>\n";
        out << "  <line class=\"diag\" x1=\"" << x(lo) << "\" y1=\"" << y(lo) << "\" x2=\""
            << x(lo + span) << "\" y2=\"" << y(lo + span)
            << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
        for (const auto& g : sorted.grid) {
            double gx = x(coord_of(sorted, g.index));
            double gy = y(coord_of(sorted, g.index));
            out << "  <text x=\"" << gx << "\" y=\"" << margin + plot + 16
                << "\" font-size=\"11\" text-anchor=\"middle\">" << g.label << "</text>\n";
            out << "  <text x=\"" << margin - 10 << "\" y=\"" << gy + 4
                << "\" font-size=\"11\" text-anchor=\"end\">" << g.label << "</text>\n";
        }
        for (const auto& e : sorted.entries) {
            double px = x(coord_of(sorted, e.iv.b));
            double py = y(coord_of(sorted, e.iv.d));
            out << "  <circle class=\"pt\" cx=\"" << px << "\" cy=\"" << py
                << "\" r=\"5\" fill=\"" << palette(e.dim) << "\"/>\n";
            if (e.mult > 1)
                out << "  <text x=\"" << px + 8 << "\" y=\"" << py - 6
                    << "\" font-size=\"11\">x" << e.mult << "</text>\n";
        }
        out << "</svg>\n";
    }
    return out.str();
}

}  // namespace zigzag
