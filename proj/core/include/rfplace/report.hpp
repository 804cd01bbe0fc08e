#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rfplace/eval.hpp"
#include "rfplace/scenario.hpp"

namespace rfplace {

// Shortest decimal form that parses back to the same double; keeps every
// emitted file byte-reproducible and lossless.
std::string format_double(double value);

// Ordered key=value lines, the machine-readable half of a run report.
class RunReport {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, double value);
    void add(const std::string& key, int value);
    void add(const std::string& key, std::uint64_t value);

    const std::vector<std::pair<std::string, std::string>>& entries() const {
        return entries_;
    }
    std::string to_kv() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

// CSV table node,x,y,power_w,feasible for a verified placement.
std::string per_node_csv(const Scenario& scenario, const EvaluationReport& report);

}  // namespace rfplace
