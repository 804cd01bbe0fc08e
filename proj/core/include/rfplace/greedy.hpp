#pragma once

#include <cstddef>
#include <vector>

#include "rfplace/model.hpp"
#include "rfplace/scenario.hpp"

namespace rfplace {

// Candidate charger positions: the cell centers of a regular grid laid over
// the field.
struct Grid {
    double cell_size_m = 0.1;
    int nx = 0;
    int ny = 0;
    Point origin;

    static Grid cover(double width_m, double height_m, double cell_size_m);

    int count() const { return nx * ny; }
    Point point(int ix, int iy) const {
        return {origin.x + (ix + 0.5) * cell_size_m,
                origin.y + (iy + 0.5) * cell_size_m};
    }
};

// D(x,y): how many chargers the greedy pass stacked on each grid point.
struct PlacementMatrix {
    int nx = 0;
    int ny = 0;
    std::vector<int> counts;  // row-major, index = ix * ny + iy

    PlacementMatrix() = default;
    PlacementMatrix(int nx_, int ny_) : nx(nx_), ny(ny_), counts(static_cast<std::size_t>(nx_) * ny_, 0) {}

    int& at(int ix, int iy) { return counts[static_cast<std::size_t>(ix) * ny + iy]; }
    int at(int ix, int iy) const { return counts[static_cast<std::size_t>(ix) * ny + iy]; }
    int total() const;
};

struct GreedyResult {
    PlacementMatrix matrix;
    Placement placement;  // chargers in the order they were committed
};

// Iteratively drops one charger per round on the grid point that maximizes
// the number of nodes meeting P_req under `model`, until every node is
// satisfied. Ties are broken by the larger total clamped power margin
// sum_i min(P_h_i, P_req), then by the lower (ix, iy) index. Throws
// infeasible_error when a round cannot raise the satisfied count.
GreedyResult greedy_place(const Scenario& scenario, const RadioParams& params,
                          const PowerProfile& profile, PowerModel model,
                          const Grid& grid);

// Indices (ascending) of the nodes whose joint power meets P_req(alpha).
// Boundary-inclusive: power == P_req counts as satisfied. Note that under
// the phasor model adding a charger may shrink this set.
std::vector<std::size_t> satisfied_set(const Scenario& scenario,
                                       const Placement& placement,
                                       const RadioParams& params,
                                       const PowerProfile& profile,
                                       PowerModel model);

}  // namespace rfplace
