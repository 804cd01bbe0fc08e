#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "rfplace/cluster.hpp"
#include "rfplace/errors.hpp"
#include "rfplace/eval.hpp"

using namespace rfplace;

namespace {

Scenario line_scenario(std::vector<double> xs) {
    Scenario s;
    s.field_width_m = 20.0;
    s.field_height_m = 4.0;
    for (double x : xs) s.nodes.push_back({x, 2.0});
    return s;
}

}  // namespace

TEST_CASE("one candidate absorbing every node yields one cluster") {
    const Scenario s = line_scenario({5.0, 5.5, 6.0, 6.5});
    const auto clusters = qt_cluster(s, 2.0);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].members.size() == 4);
}

TEST_CASE("pairwise distant nodes become singleton clusters") {
    const Scenario s = line_scenario({1.0, 6.0, 11.0, 16.0});
    const auto clusters = qt_cluster(s, 2.0);
    CHECK(clusters.size() == 4);
    for (const Cluster& c : clusters) CHECK(c.members.size() == 1);
}

TEST_CASE("a close pair clusters before the isolated node") {
    const Scenario s = line_scenario({1.0, 2.0, 10.0});
    const auto clusters = qt_cluster(s, 1.5);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].members == std::vector<std::size_t>{0, 1});
    CHECK(clusters[1].members == std::vector<std::size_t>{2});
}

TEST_CASE("equal candidate sizes commit the lowest head index") {
    const Scenario s = line_scenario({0.5, 1.5, 9.0, 10.0});
    const auto clusters = qt_cluster(s, 1.2);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].head == 0);
    CHECK(clusters[1].head == 2);
}

TEST_CASE("clusters partition the node set") {
    const Scenario s = generate_random(12.0, 12.0, 80, 5);
    const auto clusters = qt_cluster(s, 2.5);
    std::set<std::size_t> seen;
    std::size_t total = 0;
    for (const Cluster& c : clusters) {
        CHECK(!c.members.empty());
        CHECK(std::find(c.members.begin(), c.members.end(), c.head) != c.members.end());
        for (std::size_t i : c.members) {
            CHECK(distance(s.nodes[c.head], s.nodes[i]) <= 2.5);
            CHECK(seen.insert(i).second);  // disjoint
        }
        total += c.members.size();
    }
    CHECK(total == s.nodes.size());
    // commit order is largest first
    for (std::size_t m = 1; m < clusters.size(); ++m)
        CHECK(clusters[m - 1].members.size() >= clusters[m].members.size());
}

TEST_CASE("cluster count does not grow with the radius") {
    const Scenario s = generate_random(12.0, 12.0, 60, 8);
    std::size_t previous = s.nodes.size() + 1;
    for (double radius : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const std::size_t m = qt_cluster(s, radius).size();
        CHECK(m <= previous);
        previous = m;
    }
}

TEST_CASE("search region clips to the field") {
    const Rect field{0.0, 0.0, 12.0, 12.0};
    CHECK(search_region({6.0, 6.0}, 2.0, field) == Rect{4.0, 4.0, 8.0, 8.0});
    CHECK(search_region({0.5, 11.5}, 2.0, field) == Rect{0.0, 9.5, 2.5, 12.0});
    CHECK(search_region({6.0, 6.0}, 100.0, field) == field);
}

TEST_CASE("a single cluster reduces to a plain pso run") {
    Scenario s;
    s.field_width_m = 8.0;
    s.field_height_m = 8.0;
    s.nodes = {{3.6, 4.0}, {4.4, 4.0}, {4.0, 4.6}};
    const RadioParams params = RadioParams::wisp_defaults();
    const PowerProfile profile = PowerProfile::wisp_defaults();

    DncConfig config;
    config.pso.seed = 21;
    const double radius = contributive_radius(params, profile, config.delta);
    const auto clusters = qt_cluster(s, radius);
    REQUIRE(clusters.size() == 1);

    const DncResult via_dnc =
        dnc_place(s, params, profile, PowerModel::superposition, config);
    const PsoPlaceResult via_pso =
        pso_place(s, clusters[0].region, params, profile, PowerModel::superposition,
                  config.pso, Placement{}, clusters[0].members,
                  Disc{s.nodes[clusters[0].head], radius});
    CHECK(via_dnc.placement.chargers == via_pso.placement.chargers);
}

TEST_CASE("dnc output always passes the independent verifier") {
    const RadioParams params = RadioParams::wisp_defaults();
    PowerProfile profile = PowerProfile::wisp_defaults();
    profile.alpha = 0.3;

    for (std::uint64_t scenario_seed : {2ULL, 3ULL}) {
        const Scenario s = generate_random(12.0, 12.0, 24, scenario_seed);
        DncConfig config;
        config.pso.seed = 1;
        config.pso.max_iters = 120;
        const DncResult result =
            dnc_place(s, params, profile, PowerModel::superposition, config);
        const EvaluationReport report =
            verify(result.placement, s, params, profile, PowerModel::superposition);
        CHECK(report.sustainable_ratio == 1.0);
        CHECK(result.placement.chargers.size() >= 1);
        for (const Point& c : result.placement.chargers)
            CHECK(s.field().contains(c, 1e-9));
    }
}

TEST_CASE("dnc determinism") {
    const Scenario s = generate_random(10.0, 10.0, 18, 12);
    const RadioParams params = RadioParams::wisp_defaults();
    const PowerProfile profile = PowerProfile::wisp_defaults();
    DncConfig config;
    config.pso.seed = 5;
    const DncResult a = dnc_place(s, params, profile, PowerModel::superposition, config);
    const DncResult b = dnc_place(s, params, profile, PowerModel::superposition, config);
    CHECK(a.placement.chargers == b.placement.chargers);
}

TEST_CASE("cluster infeasibility names the cluster") {
    Scenario s;
    s.field_width_m = 12.0;
    s.field_height_m = 12.0;
    // a tight clump needing more than one charger
    s.nodes = {{1.0, 1.0}, {1.0, 3.2}, {3.2, 1.0}, {3.2, 3.2}, {2.1, 2.1}};
    const RadioParams params = RadioParams::wisp_defaults();
    PowerProfile profile = PowerProfile::wisp_defaults();
    profile.alpha = 1.0;

    DncConfig config;
    config.pso.max_k = 1;  // force failure as soon as a cluster needs two
    config.pso.max_iters = 30;
    try {
        dnc_place(s, params, profile, PowerModel::superposition, config);
        FAIL("expected infeasible_error");
    } catch (const infeasible_error& e) {
        CHECK(std::string(e.what()).find("cluster") != std::string::npos);
    }
}

TEST_CASE("dnc config validation") {
    DncConfig config;
    config.delta = 0.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.delta = 1.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}
