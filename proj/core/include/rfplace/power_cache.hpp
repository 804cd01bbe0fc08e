#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rfplace/geometry.hpp"
#include "rfplace/model.hpp"

namespace rfplace {

// Model-specific payload of one (charger, node) pair. For the phasor model
// this is cos/sin of the phase over the squared range; for the scalar-sum
// model `a` is the inverse squared range; for the disk model `a` is the
// plain distance.
struct ChargerContribution {
    double a = 0.0;
    double b = 0.0;
};

// Incremental joint-power evaluation against a fixed node list. Solvers use
// this to apply candidate chargers in O(nodes) instead of re-summing over
// every committed charger. The independent verifier in eval.hpp deliberately
// does not use this class.
class JointPowerCache {
public:
    JointPowerCache(PowerModel model, const RadioParams& params,
                    std::span<const Point> nodes,
                    std::optional<double> disk_radius_m = std::nullopt);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t charger_count() const { return committed_; }

    ChargerContribution contribution(Point charger, std::size_t node) const;

    // Folds `charger` into the committed per-node state.
    void add_charger(Point charger);

    // Power from the committed chargers only.
    double node_power(std::size_t node) const;

    // Power from the committed chargers plus one candidate contribution.
    double node_power_with(std::size_t node, const ChargerContribution& extra) const;

    // Power from the committed chargers plus a candidate charger set.
    double node_power_with(std::size_t node, std::span<const Point> extra) const;

private:
    PowerModel model_;
    double rho_;
    double eps_;
    double phase_per_meter_;
    double disk_radius_;
    std::vector<Point> nodes_;
    std::size_t committed_ = 0;
    // superposition: (sa, sb) = running phasor sum;
    // summation: sa = running sum of 1/(d+eps)^2;
    // disk: sa = running min distance.
    std::vector<double> sa_;
    std::vector<double> sb_;
};

}  // namespace rfplace
