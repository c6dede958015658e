#include "qta/svg.hpp"

#include <algorithm>
#include <sstream>

#include "qta/error.hpp"

namespace qta {

namespace {

const char* kPalette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
                          "#f032e6", "#bcf60c", "#008080", "#9a6324", "#800000", "#808000"};
constexpr int kPaletteSize = 12;
constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 40.0;

const char* color_for(int label) {
    if (label < 1) return "#555555";
    return kPalette[(label - 1) % kPaletteSize];
}

} // namespace

std::string render_tour_svg(const Instance& inst, std::span<const int> tour,
                            std::span<const int> labels) {
    if (static_cast<int>(tour.size()) != inst.n)
        fail(Errc::invalid_argument, "tour length does not match instance size");
    if (!labels.empty() && static_cast<int>(labels.size()) != inst.n)
        fail(Errc::invalid_argument, "label vector length does not match instance size");

    // For GEO instances longitude is the natural horizontal axis.
    const bool geo = inst.mode == DistanceMode::tsplib_geo;
    auto px = [&](int c) { return geo ? inst.ys[c] : inst.xs[c]; };
    auto py = [&](int c) { return geo ? inst.xs[c] : inst.ys[c]; };

    double min_x = px(0), max_x = px(0), min_y = py(0), max_y = py(0);
    for (int c = 1; c < inst.n; ++c) {
        min_x = std::min(min_x, px(c));
        max_x = std::max(max_x, px(c));
        min_y = std::min(min_y, py(c));
        max_y = std::max(max_y, py(c));
    }
    const double span_x = std::max(max_x - min_x, 1e-12);
    const double span_y = std::max(max_y - min_y, 1e-12);
    auto sx = [&](int c) { return kMargin + (px(c) - min_x) / span_x * (kWidth - 2 * kMargin); };
    auto sy = [&](int c) { return kHeight - kMargin - (py(c) - min_y) / span_y * (kHeight - 2 * kMargin); };

    std::ostringstream out;
    out.precision(2);
    out << std::fixed;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << static_cast<int>(kWidth)
        << "\" height=\"" << static_cast<int>(kHeight) << "\" viewBox=\"0 0 "
        << static_cast<int>(kWidth) << " " << static_cast<int>(kHeight) << "\">\n";
    out << "<title>" << inst.name << "</title>\n";

    const int n = inst.n;
    for (int k = 0; k < n; ++k) {
        const int a = tour[k];
        const int b = tour[(k + 1) % n];
        const bool bridge = labels.empty() || labels[a] != labels[b];
        const char* color = bridge ? "#333333" : color_for(labels[a]);
        out << "<line class=\"edge\" x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b)
            << "\" y2=\"" << sy(b) << "\" stroke=\"" << color << "\" stroke-width=\"2\"";
        if (bridge) out << " stroke-dasharray=\"6 4\"";
        out << "/>\n";
    }
    for (int c = 0; c < n; ++c) {
        const char* color = labels.empty() ? "#555555" : color_for(labels[c]);
        out << "<circle class=\"node\" cx=\"" << sx(c) << "\" cy=\"" << sy(c)
            << "\" r=\"5\" fill=\"" << color << "\"><title>" << (c + 1) << "</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace qta
