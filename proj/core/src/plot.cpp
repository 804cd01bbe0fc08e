#include "rfplace/plot.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace rfplace {

namespace {

std::string px(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

}  // namespace

std::string render_svg(const Scenario& scenario, const Placement& placement,
                       const PlotOptions& options) {
    scenario.validate();
    for (std::size_t k = 0; k < placement.chargers.size(); ++k) {
        if (!scenario.field().contains(placement.chargers[k], 1e-9))
            throw std::invalid_argument("render_svg: chargers[" + std::to_string(k) +
                                        "] lies outside the scenario field");
    }

    const double scale = options.pixels_per_meter;
    const double margin = options.margin_px;
    const double width_px = scenario.field_width_m * scale + 2.0 * margin;
    const double height_px = scenario.field_height_m * scale + 2.0 * margin;
    const auto to_x = [&](double x) { return margin + x * scale; };
    // SVG y axis points down; keep the field's y axis pointing up
    const auto to_y = [&](double y) {
        return margin + (scenario.field_height_m - y) * scale;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(width_px) +
           "\" height=\"" + px(height_px) + "\" viewBox=\"0 0 " + px(width_px) + " " +
           px(height_px) + "\">\n";
    svg += "<rect x=\"" + px(margin) + "\" y=\"" + px(margin) + "\" width=\"" +
           px(scenario.field_width_m * scale) + "\" height=\"" +
           px(scenario.field_height_m * scale) +
           "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

    if (options.coverage_radius_m) {
        const double r = *options.coverage_radius_m * scale;
        for (const Point& c : placement.chargers) {
            svg += "<circle class=\"coverage\" cx=\"" + px(to_x(c.x)) + "\" cy=\"" +
                   px(to_y(c.y)) + "\" r=\"" + px(r) +
                   "\" fill=\"none\" stroke=\"#c44\" stroke-width=\"0.5\" "
                   "stroke-dasharray=\"4 3\"/>\n";
        }
    }

    for (const Point& node : scenario.nodes) {
        svg += "<circle class=\"node\" cx=\"" + px(to_x(node.x)) + "\" cy=\"" +
               px(to_y(node.y)) + "\" r=\"2.5\" fill=\"#36c\"/>\n";
    }

    // one path element per charger: a 45-degree cross
    const double arm = 5.0;
    for (const Point& c : placement.chargers) {
        const double x = to_x(c.x), y = to_y(c.y);
        svg += "<path class=\"charger\" d=\"M" + px(x - arm) + " " + px(y - arm) + " L" +
               px(x + arm) + " " + px(y + arm) + " M" + px(x - arm) + " " + px(y + arm) +
               " L" + px(x + arm) + " " + px(y - arm) +
               "\" stroke=\"#c22\" stroke-width=\"2\" fill=\"none\"/>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace rfplace
