#include "rfplace/report.hpp"

#include <nlohmann/json.hpp>

namespace rfplace {

std::string format_double(double value) {
    return nlohmann::json(value).dump();
}

void RunReport::add(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
}

void RunReport::add(const std::string& key, double value) {
    entries_.emplace_back(key, format_double(value));
}

void RunReport::add(const std::string& key, int value) {
    entries_.emplace_back(key, std::to_string(value));
}

void RunReport::add(const std::string& key, std::uint64_t value) {
    entries_.emplace_back(key, std::to_string(value));
}

std::string RunReport::to_kv() const {
    std::string out;
    for (const auto& [key, value] : entries_) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    return out;
}

std::string per_node_csv(const Scenario& scenario, const EvaluationReport& report) {
    std::string out = "node,x,y,power_w,feasible\n";
    for (std::size_t i = 0; i < scenario.nodes.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += format_double(scenario.nodes[i].x);
        out += ',';
        out += format_double(scenario.nodes[i].y);
        out += ',';
        out += format_double(report.per_node_power_w[i]);
        out += ',';
        out += report.per_node_feasible[i] ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace rfplace
