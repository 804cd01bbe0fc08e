#include "rfplace/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rfplace {

std::string to_string(LatticePattern pattern) {
    switch (pattern) {
        case LatticePattern::triangle_summation: return "triangle-summation";
        case LatticePattern::triangle_disk: return "triangle-disk";
    }
    return "?";
}

LatticePattern lattice_pattern_from_string(const std::string& name) {
    if (name == "triangle-summation") return LatticePattern::triangle_summation;
    if (name == "triangle-disk") return LatticePattern::triangle_disk;
    throw std::invalid_argument("unknown lattice pattern: " + name);
}

double lattice_radius(LatticePattern pattern, const RadioParams& params,
                      const PowerProfile& profile) {
    const PatternRadii radii = pattern_radii(params, profile);
    return pattern == LatticePattern::triangle_summation ? radii.r3_m : radii.r1_m;
}

Placement triangle_lattice(const LatticeSpec& spec) {
    if (!(spec.radius_m > 0.0))
        throw std::invalid_argument("triangle_lattice: radius must be positive");
    const Rect& field = spec.field;
    if (!(field.width() > 0.0) || !(field.height() > 0.0))
        throw std::invalid_argument("triangle_lattice: empty field");

    const Point center{(field.x0 + field.x1) / 2.0, (field.y0 + field.y1) / 2.0};
    const double half_diagonal = std::hypot(field.width(), field.height()) / 2.0;
    if (spec.radius_m >= half_diagonal) return Placement{{center}};

    // side sqrt(3)*r makes the triangle circumradius exactly r
    const double side = std::sqrt(3.0) * spec.radius_m;
    const double row_pitch = 1.5 * spec.radius_m;  // side * sqrt(3)/2

    Placement placement;
    const int row_lo = static_cast<int>(std::floor((field.y0 - side) / row_pitch));
    const int row_hi = static_cast<int>(std::ceil((field.y1 + side) / row_pitch));
    for (int row = row_lo; row <= row_hi; ++row) {
        const double y = row * row_pitch;
        if (y < field.y0 - side || y > field.y1 + side) continue;
        const double x_offset = (row % 2 != 0) ? side / 2.0 : 0.0;
        const int col_lo = static_cast<int>(std::floor((field.x0 - side - x_offset) / side));
        const int col_hi = static_cast<int>(std::ceil((field.x1 + side - x_offset) / side));
        for (int col = col_lo; col <= col_hi; ++col) {
            const double x = x_offset + col * side;
            if (x < field.x0 - side || x > field.x1 + side) continue;
            // snapping onto the boundary never moves a vertex away from any
            // field point, so coverage survives the c_k-in-field constraint
            const Point snapped = field.clamp({x, y});
            if (std::find(placement.chargers.begin(), placement.chargers.end(), snapped) ==
                placement.chargers.end())
                placement.chargers.push_back(snapped);
        }
    }
    return placement;
}

double evaluate_pattern(const Placement& placement, const Scenario& scenario,
                        const RadioParams& params, const PowerProfile& profile,
                        PowerModel eval_model) {
    scenario.validate();
    const double p_req = required_power(profile);
    std::size_t satisfied = 0;
    for (const Point& node : scenario.nodes) {
        const double p =
            joint_power(eval_model, params, profile, node, placement.chargers);
        if (p >= p_req) ++satisfied;
    }
    return static_cast<double>(satisfied) / static_cast<double>(scenario.nodes.size());
}

}  // namespace rfplace
