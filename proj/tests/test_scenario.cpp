#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rfplace/errors.hpp"
#include "rfplace/scenario.hpp"

using namespace rfplace;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "rfplace_tests";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("regular layout is a centered lattice") {
    const Scenario s = generate_regular(12.0, 12.0, 144);
    REQUIRE(s.nodes.size() == 144);
    CHECK(s.nodes[0] == Point{0.5, 0.5});
    CHECK(s.nodes[1] == Point{1.5, 0.5});
    CHECK(s.nodes[12] == Point{0.5, 1.5});
    CHECK(s.nodes[143] == Point{11.5, 11.5});

    const Scenario s64 = generate_regular(12.0, 12.0, 64);
    REQUIRE(s64.nodes.size() == 64);
    CHECK(s64.nodes[0].x == doctest::Approx(0.75));
    CHECK(s64.nodes[1].x - s64.nodes[0].x == doctest::Approx(1.5));

    const Scenario s1 = generate_regular(12.0, 12.0, 1);
    CHECK(s1.nodes[0].x == doctest::Approx(6.0));
    CHECK(s1.nodes[0].y == doctest::Approx(6.0));
}

TEST_CASE("regular layout maps onto itself under field mirroring") {
    const Scenario s = generate_regular(9.0, 9.0, 81);
    for (const Point& p : s.nodes) {
        const Point mirrored{9.0 - p.x, p.y};
        const bool found = std::any_of(s.nodes.begin(), s.nodes.end(), [&](Point q) {
            return std::abs(q.x - mirrored.x) < 1e-12 && std::abs(q.y - mirrored.y) < 1e-12;
        });
        CHECK(found);
    }
}

TEST_CASE("regular layout rejects non-square node counts") {
    CHECK_THROWS_AS(generate_regular(12.0, 12.0, 100 + 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_regular(12.0, 12.0, 0), std::invalid_argument);
}

TEST_CASE("random layout is reproducible and in bounds") {
    const Scenario a = generate_random(12.0, 12.0, 120, 42);
    const Scenario b = generate_random(12.0, 12.0, 120, 42);
    REQUIRE(a.nodes.size() == 120);
    CHECK(a.nodes == b.nodes);
    CHECK(a.seed == 42);
    for (const Point& p : a.nodes) CHECK(a.field().contains(p));

    const Scenario c = generate_random(12.0, 12.0, 120, 43);
    CHECK(a.nodes != c.nodes);

    CHECK(generate_random(10.0, 8.0, 60, 1).nodes.size() == 60);
}

TEST_CASE("scenario files round-trip exactly") {
    for (const Scenario& original :
         {generate_regular(12.0, 12.0, 144), generate_random(12.0, 12.0, 37, 99)}) {
        const fs::path path = temp_file("roundtrip.json");
        save_scenario(original, path);
        const Scenario loaded = load_scenario(path);
        CHECK(loaded.nodes == original.nodes);
        CHECK(loaded.field_width_m == original.field_width_m);
        CHECK(loaded.field_height_m == original.field_height_m);
        CHECK(loaded.seed == original.seed);
    }
}

TEST_CASE("scenario loading validates the schema") {
    const fs::path path = temp_file("bad.json");

    std::ofstream(path) << R"({"field": {"width": 4, "height": 4}, "nodes": [[5.0, 1.0]]})";
    CHECK_THROWS_AS(load_scenario(path), parse_error);

    std::ofstream(path) << R"({"field": {"width": 4, "height": 4}, "nodes": []})";
    CHECK_THROWS_AS(load_scenario(path), parse_error);

    std::ofstream(path) << R"({"nodes": [[1.0, 1.0]]})";
    CHECK_THROWS_AS(load_scenario(path), parse_error);

    std::ofstream(path) << "{not json";
    CHECK_THROWS_AS(load_scenario(path), parse_error);

    std::ofstream(path) << R"({"field": {"width": 4, "height": 4}, "nodes": [[1.0]]})";
    CHECK_THROWS_AS(load_scenario(path), parse_error);

    CHECK_THROWS_AS(load_scenario(temp_file("does_not_exist.json")), io_error);
}

TEST_CASE("placement files round-trip") {
    Placement p;
    p.chargers = {{0.05, 0.05}, {11.95, 3.25}, {0.05, 0.05}};  // duplicates are legal
    const fs::path path = temp_file("placement.json");
    save_placement(p, path);
    const Placement loaded = load_placement(path);
    CHECK(loaded.chargers == p.chargers);

    std::ofstream(path) << R"({"nodes": []})";
    CHECK_THROWS_AS(load_placement(path), parse_error);
}
