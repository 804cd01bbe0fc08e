#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rfplace {

// File could not be read or written.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File was read but its content does not match the expected schema.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A placement algorithm cannot satisfy the power demand of every node.
// Node indices are 0-based positions in the scenario's node list.
class infeasible_error : public std::runtime_error {
public:
    infeasible_error(const std::string& msg, std::vector<std::size_t> unsatisfied)
        : std::runtime_error(msg), unsatisfied_(std::move(unsatisfied)) {}

    const std::vector<std::size_t>& unsatisfied_nodes() const { return unsatisfied_; }

private:
    std::vector<std::size_t> unsatisfied_;
};

}  // namespace rfplace
