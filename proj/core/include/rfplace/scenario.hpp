#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "rfplace/geometry.hpp"

namespace rfplace {

// A surveillance field with the sensor nodes to be kept charged. Node
// identity is the index in `nodes`; all generation and serialization is
// order-preserving.
struct Scenario {
    double field_width_m = 0.0;
    double field_height_m = 0.0;
    std::vector<Point> nodes;
    std::optional<std::uint64_t> seed;

    Rect field() const { return {0.0, 0.0, field_width_m, field_height_m}; }

    // Throws std::invalid_argument on empty node list, non-positive field
    // dimensions, or nodes outside the field.
    void validate() const;
};

// Charger coordinates, in placement order. Duplicate coordinates are legal:
// a tight power demand can stack several chargers in one spot.
struct Placement {
    std::vector<Point> chargers;
};

// n nodes on a sqrt(n) x sqrt(n) lattice of cell centers (half-pitch inset
// from the field border). n must be a positive perfect square.
Scenario generate_regular(double width_m, double height_m, int n);

// n nodes i.i.d. uniform over the field. Same seed, same scenario, on any
// platform (see rng.hpp).
Scenario generate_random(double width_m, double height_m, int n, std::uint64_t seed);

// JSON file {"field": {"width", "height"}, "nodes": [[x,y],...], "seed"?}.
// Numbers round-trip exactly. load validates the scenario and reports the
// offending field on schema violations.
Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

// JSON file {"chargers": [[x,y],...]}.
Placement load_placement(const std::filesystem::path& path);
void save_placement(const Placement& placement, const std::filesystem::path& path);

}  // namespace rfplace
