#pragma once

#include <optional>
#include <string>

#include "rfplace/scenario.hpp"

namespace rfplace {

struct PlotOptions {
    double pixels_per_meter = 50.0;
    double margin_px = 25.0;
    // when set, draws a dashed circle of this radius around every charger
    std::optional<double> coverage_radius_m;
};

// Renders the field, nodes (dots) and chargers (crosses) as a standalone SVG
// string. Purely a function of its inputs, so identical runs emit identical
// bytes. Throws std::invalid_argument when a charger lies outside the
// scenario's field.
std::string render_svg(const Scenario& scenario, const Placement& placement,
                       const PlotOptions& options = {});

}  // namespace rfplace
