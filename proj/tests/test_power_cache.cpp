#include <doctest.h>

#include <random>
#include <vector>

#include "rfplace/power_cache.hpp"
#include "rfplace/rng.hpp"

using namespace rfplace;

// The cache must agree with the plain model evaluation for every model kind,
// both for committed chargers and for candidate extensions.
TEST_CASE("cached joint power matches direct evaluation") {
    const RadioParams params = RadioParams::wisp_defaults();
    const PowerProfile profile = PowerProfile::wisp_defaults();
    const double r1 = pattern_radii(params, profile).r1_m;

    std::mt19937_64 rng(5);
    std::vector<Point> nodes;
    for (int i = 0; i < 25; ++i)
        nodes.push_back({uniform(rng, 0.0, 12.0), uniform(rng, 0.0, 12.0)});

    for (PowerModel model :
         {PowerModel::superposition, PowerModel::summation, PowerModel::disk}) {
        std::optional<double> disk_radius;
        if (model == PowerModel::disk) disk_radius = r1;
        JointPowerCache cache(model, params, nodes, disk_radius);

        std::vector<Point> committed;
        for (int step = 0; step < 6; ++step) {
            const Point next{uniform(rng, 0.0, 12.0), uniform(rng, 0.0, 12.0)};
            const std::vector<Point> extra{{uniform(rng, 0.0, 12.0), uniform(rng, 0.0, 12.0)},
                                           {uniform(rng, 0.0, 12.0), uniform(rng, 0.0, 12.0)}};

            for (std::size_t i = 0; i < nodes.size(); ++i) {
                CHECK(cache.node_power(i) ==
                      doctest::Approx(joint_power(model, params, nodes[i], committed,
                                                  disk_radius))
                          .epsilon(1e-12));

                std::vector<Point> with_next = committed;
                with_next.push_back(next);
                CHECK(cache.node_power_with(i, cache.contribution(next, i)) ==
                      doctest::Approx(joint_power(model, params, nodes[i], with_next,
                                                  disk_radius))
                          .epsilon(1e-12));

                std::vector<Point> with_extra = committed;
                with_extra.insert(with_extra.end(), extra.begin(), extra.end());
                CHECK(cache.node_power_with(i, extra) ==
                      doctest::Approx(joint_power(model, params, nodes[i], with_extra,
                                                  disk_radius))
                          .epsilon(1e-12));
            }

            cache.add_charger(next);
            committed.push_back(next);
        }
        CHECK(cache.charger_count() == 6);
    }
}

TEST_CASE("disk cache requires a radius") {
    const RadioParams params = RadioParams::wisp_defaults();
    const std::vector<Point> nodes{{1.0, 1.0}};
    CHECK_THROWS_AS(JointPowerCache(PowerModel::disk, params, nodes), std::invalid_argument);
}
