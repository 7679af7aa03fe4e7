#include "udg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace udg {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                          "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string graph_to_svg(const UDGraph& g, const SvgOptions& opt) {
    const std::size_t n = g.num_vertices();
    std::vector<std::pair<double, double>> pos(n);
    if (g.geometric()) {
        for (std::size_t i = 0; i < n; ++i)
            pos[i] = {to_double(g.point(i).x), to_double(g.point(i).y)};
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double ang = 2.0 * M_PI * static_cast<double>(i) / std::max<std::size_t>(n, 1);
            pos[i] = {std::cos(ang) * (n > 1 ? 2.0 : 0.0), std::sin(ang) * (n > 1 ? 2.0 : 0.0)};
        }
    }

    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    if (n > 0) {
        xmin = xmax = pos[0].first;
        ymin = ymax = pos[0].second;
        for (auto [x, y] : pos) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    xmin -= opt.margin;
    ymin -= opt.margin;
    xmax += opt.margin;
    ymax += opt.margin;

    const double s = opt.scale;
    // SVG's y axis points down; flip so the drawing matches the plane.
    auto px = [&](double x) { return (x - xmin) * s; };
    auto py = [&](double y) { return (ymax - y) * s; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (xmax - xmin) * s
        << "\" height=\"" << (ymax - ymin) * s << "\" viewBox=\"0 0 " << (xmax - xmin) * s << ' '
        << (ymax - ymin) * s << "\">\n";

    for (auto [u, v] : g.edge_list())
        svg << "  <line x1=\"" << px(pos[u].first) << "\" y1=\"" << py(pos[u].second) << "\" x2=\""
            << px(pos[v].first) << "\" y2=\"" << py(pos[v].second)
            << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";

    for (std::size_t i = 0; i < n; ++i) {
        const char* fill = "#1f77b4";
        if (opt.color_by_orbit && i < opt.color_by_orbit->orbit_of.size())
            fill = kPalette[opt.color_by_orbit->orbit_of[i] % std::size(kPalette)];
        double r = opt.vertex_radius;
        if (opt.weights && (*opt.weights)[i] >= 0) {
            // Area proportional to weight, with a visible floor.
            const double w = (*opt.weights)[i].convert_to<double>();
            r = std::max(2.0, opt.vertex_radius * std::sqrt(w * static_cast<double>(n)));
        }
        svg << "  <circle cx=\"" << px(pos[i].first) << "\" cy=\"" << py(pos[i].second) << "\" r=\""
            << r << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace udg
