#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rfplace/baseline.hpp"
#include "rfplace/rng.hpp"

using namespace rfplace;

TEST_CASE("lattice rows follow equilateral triangle geometry") {
    LatticeSpec spec;
    spec.pattern = LatticePattern::triangle_summation;
    spec.radius_m = 2.0;
    spec.field = {0.0, 0.0, 30.0, 30.0};
    const Placement lattice = triangle_lattice(spec);
    const double side = std::sqrt(3.0) * spec.radius_m;

    // interior vertices keep the exact lattice pitch: nearest neighbour of an
    // interior vertex sits one side away
    for (const Point& a : lattice.chargers) {
        if (a.x < side || a.x > 30.0 - side || a.y < side || a.y > 30.0 - side) continue;
        double nearest = 1e30;
        for (const Point& b : lattice.chargers) {
            if (a == b) continue;
            nearest = std::min(nearest, distance(a, b));
        }
        CHECK(nearest == doctest::Approx(side).epsilon(1e-9));
    }
}

TEST_CASE("every field point is covered within the lattice radius") {
    std::mt19937_64 rng(15);
    for (double radius : {1.0, 2.166, 3.4}) {
        LatticeSpec spec;
        spec.pattern = LatticePattern::triangle_disk;
        spec.radius_m = radius;
        spec.field = {0.0, 0.0, 12.0, 12.0};
        const Placement lattice = triangle_lattice(spec);
        for (const Point& c : lattice.chargers) CHECK(spec.field.contains(c, 1e-12));

        for (int trial = 0; trial < 400; ++trial) {
            const Point p{uniform(rng, 0.0, 12.0), uniform(rng, 0.0, 12.0)};
            double nearest = 1e30;
            for (const Point& c : lattice.chargers)
                nearest = std::min(nearest, distance(p, c));
            CHECK(nearest <= radius + 1e-9);
        }
    }
}

TEST_CASE("a radius covering the field collapses to one charger") {
    LatticeSpec spec;
    spec.pattern = LatticePattern::triangle_disk;
    spec.radius_m = 10.0;
    spec.field = {0.0, 0.0, 12.0, 12.0};
    const Placement lattice = triangle_lattice(spec);
    REQUIRE(lattice.chargers.size() == 1);
    CHECK(lattice.chargers[0] == Point{6.0, 6.0});
}

TEST_CASE("halving the radius costs at most ~4x the chargers") {
    LatticeSpec spec;
    spec.pattern = LatticePattern::triangle_summation;
    spec.field = {0.0, 0.0, 12.0, 12.0};
    spec.radius_m = 1.1;
    const std::size_t fine = triangle_lattice(spec).chargers.size();
    spec.radius_m = 2.2;
    const std::size_t coarse = triangle_lattice(spec).chargers.size();
    CHECK(static_cast<double>(fine) <= 4.5 * static_cast<double>(coarse));
    CHECK(fine > coarse);
}

TEST_CASE("r1 lattice reaches every node under its own disk model") {
    const Scenario s = generate_regular(12.0, 12.0, 144);
    const RadioParams params = RadioParams::wisp_defaults();
    const PowerProfile profile = PowerProfile::wisp_defaults();

    LatticeSpec spec;
    spec.pattern = LatticePattern::triangle_disk;
    spec.radius_m = lattice_radius(spec.pattern, params, profile);
    spec.field = s.field();
    const Placement lattice = triangle_lattice(spec);
    CHECK(evaluate_pattern(lattice, s, params, profile, PowerModel::disk) == 1.0);
}

TEST_CASE("r3 lattice reaches every node under the scalar-sum model") {
    const Scenario s = generate_regular(12.0, 12.0, 144);
    const RadioParams params = RadioParams::wisp_defaults();
    const PowerProfile profile = PowerProfile::wisp_defaults();

    LatticeSpec spec;
    spec.pattern = LatticePattern::triangle_summation;
    spec.radius_m = lattice_radius(spec.pattern, params, profile);
    spec.field = s.field();
    const Placement lattice = triangle_lattice(spec);
    CHECK(evaluate_pattern(lattice, s, params, profile, PowerModel::summation) == 1.0);
}

TEST_CASE("phase interference degrades the r3 lattice") {
    const Scenario s = generate_regular(12.0, 12.0, 144);
    const RadioParams params = RadioParams::wisp_defaults();
    const PowerProfile profile = PowerProfile::wisp_defaults();

    LatticeSpec spec;
    spec.pattern = LatticePattern::triangle_summation;
    spec.radius_m = lattice_radius(spec.pattern, params, profile);
    spec.field = s.field();
    const Placement lattice = triangle_lattice(spec);
    CHECK(evaluate_pattern(lattice, s, params, profile, PowerModel::superposition) < 0.5);
}

TEST_CASE("pattern evaluation basics") {
    const Scenario s = generate_regular(6.0, 6.0, 9);
    const RadioParams params = RadioParams::wisp_defaults();
    const PowerProfile profile = PowerProfile::wisp_defaults();

    CHECK(evaluate_pattern(Placement{}, s, params, profile, PowerModel::superposition) ==
          0.0);

    Placement placement;
    placement.chargers = {{1.0, 1.0}, {5.0, 5.0}, {3.0, 3.0}};
    const double ratio =
        evaluate_pattern(placement, s, params, profile, PowerModel::superposition);
    Placement permuted;
    permuted.chargers = {{3.0, 3.0}, {1.0, 1.0}, {5.0, 5.0}};
    CHECK(evaluate_pattern(permuted, s, params, profile, PowerModel::superposition) ==
          doctest::Approx(ratio).epsilon(1e-12));
}

TEST_CASE("lattice pattern names round-trip") {
    for (LatticePattern pattern :
         {LatticePattern::triangle_summation, LatticePattern::triangle_disk})
        CHECK(lattice_pattern_from_string(to_string(pattern)) == pattern);
    CHECK_THROWS_AS(lattice_pattern_from_string("square"), std::invalid_argument);
}
