#include "rfplace/scenario.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "rfplace/errors.hpp"
#include "rfplace/rng.hpp"

namespace rfplace {

using nlohmann::json;

void Scenario::validate() const {
    if (!(field_width_m > 0.0) || !(field_height_m > 0.0))
        throw std::invalid_argument("Scenario: field dimensions must be positive");
    if (nodes.empty())
        throw std::invalid_argument("Scenario: node list must not be empty");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!field().contains(nodes[i]))
            throw std::invalid_argument("Scenario: nodes[" + std::to_string(i) +
                                        "] lies outside the field");
    }
}

Scenario generate_regular(double width_m, double height_m, int n) {
    if (n < 1) throw std::invalid_argument("generate_regular: n must be >= 1");
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (side * side != n)
        throw std::invalid_argument("generate_regular: n must be a perfect square");

    Scenario s;
    s.field_width_m = width_m;
    s.field_height_m = height_m;
    const double pitch_x = width_m / side;
    const double pitch_y = height_m / side;
    s.nodes.reserve(static_cast<std::size_t>(n));
    for (int iy = 0; iy < side; ++iy)
        for (int ix = 0; ix < side; ++ix)
            s.nodes.push_back({(ix + 0.5) * pitch_x, (iy + 0.5) * pitch_y});
    s.validate();
    return s;
}

Scenario generate_random(double width_m, double height_m, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_random: n must be >= 1");
    Scenario s;
    s.field_width_m = width_m;
    s.field_height_m = height_m;
    s.seed = seed;
    std::mt19937_64 rng(seed);
    s.nodes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = uniform(rng, 0.0, width_m);
        const double y = uniform(rng, 0.0, height_m);
        s.nodes.push_back({x, y});
    }
    s.validate();
    return s;
}

namespace {

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw io_error("write failed: " + path.string());
}

std::vector<Point> parse_point_list(const json& arr, const std::string& what) {
    if (!arr.is_array()) throw parse_error(what + " must be an array");
    std::vector<Point> points;
    points.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& p = arr[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw parse_error(what + "[" + std::to_string(i) + "] must be [x, y]");
        points.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return points;
}

json point_list_to_json(const std::vector<Point>& points) {
    json arr = json::array();
    for (const Point& p : points) arr.push_back(json::array({p.x, p.y}));
    return arr;
}

}  // namespace

Scenario load_scenario(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    if (!j.is_object() || !j.contains("field") || !j.contains("nodes"))
        throw parse_error(path.string() + ": expected {field, nodes[, seed]}");
    const json& field = j.at("field");
    if (!field.is_object() || !field.contains("width") || !field.contains("height"))
        throw parse_error(path.string() + ": field must carry width and height");

    Scenario s;
    s.field_width_m = field.at("width").get<double>();
    s.field_height_m = field.at("height").get<double>();
    s.nodes = parse_point_list(j.at("nodes"), "nodes");
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
    return s;
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    scenario.validate();
    json j;
    j["field"]["width"] = scenario.field_width_m;
    j["field"]["height"] = scenario.field_height_m;
    j["nodes"] = point_list_to_json(scenario.nodes);
    if (scenario.seed) j["seed"] = *scenario.seed;
    write_text_file(path, j.dump(2) + "\n");
}

Placement load_placement(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    if (!j.is_object() || !j.contains("chargers"))
        throw parse_error(path.string() + ": expected {chargers}");
    Placement p;
    p.chargers = parse_point_list(j.at("chargers"), "chargers");
    return p;
}

void save_placement(const Placement& placement, const std::filesystem::path& path) {
    json j;
    j["chargers"] = point_list_to_json(placement.chargers);
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace rfplace
