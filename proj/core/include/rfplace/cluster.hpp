#pragma once

#include <cstddef>
#include <vector>

#include "rfplace/pso.hpp"

namespace rfplace {

// One Quality-Threshold cluster: the head node, its members (head included,
// ascending indices), and the search rectangle enclosing the head's
// contributive region clipped to the field.
struct Cluster {
    std::size_t head = 0;
    std::vector<std::size_t> members;
    Rect region;
};

struct DncConfig {
    double delta = 0.25;  // contributive-radius tuning factor, (0,1)
    PsoConfig pso;

    void validate() const;
};

// Quality Threshold clustering: repeatedly form, around every unclustered
// node, the candidate set of unclustered nodes within `radius`, commit the
// largest candidate (ties: lowest head index), and repeat until every node
// is clustered. The result partitions the node set; clusters appear in
// commit order (largest first).
std::vector<Cluster> qt_cluster(const Scenario& scenario, double radius_m);

// Bounding square of the disc of `radius` around `head`, clipped to the
// field. Saturates to the whole field for large radii.
Rect search_region(Point head, double radius_m, const Rect& field);

struct DncResult {
    Placement placement;
    std::vector<Cluster> clusters;
    int repair_passes = 0;
};

// Divide-and-conquer placement: QT-cluster the nodes by contributive radius,
// then solve clusters in commit order with pso_place, feeding every charger
// committed so far back in as a fixed (reusable) contributor. A final global
// re-check catches nodes that later chargers pushed below P_req through
// phase interference; such nodes are repaired with additional field-wide
// pso_place passes until the full placement verifies.
DncResult dnc_place(const Scenario& scenario, const RadioParams& params,
                    const PowerProfile& profile, PowerModel model,
                    const DncConfig& config);

}  // namespace rfplace
