#include "rfplace/greedy.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rfplace/errors.hpp"
#include "rfplace/power_cache.hpp"

namespace rfplace {

Grid Grid::cover(double width_m, double height_m, double cell_size_m) {
    if (!(cell_size_m > 0.0))
        throw std::invalid_argument("Grid: cell size must be positive");
    if (!(width_m > 0.0) || !(height_m > 0.0))
        throw std::invalid_argument("Grid: field dimensions must be positive");
    Grid g;
    g.cell_size_m = cell_size_m;
    // 1e-9 slack so 12 m / 0.1 m comes out as 120 cells despite rounding
    g.nx = std::max(1, static_cast<int>(std::floor(width_m / cell_size_m + 1e-9)));
    g.ny = std::max(1, static_cast<int>(std::floor(height_m / cell_size_m + 1e-9)));
    g.origin = {0.0, 0.0};
    return g;
}

int PlacementMatrix::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

namespace {

std::optional<double> disk_radius_for(PowerModel model, const RadioParams& params,
                                      const PowerProfile& profile) {
    if (model != PowerModel::disk) return std::nullopt;
    return pattern_radii(params, profile).r1_m;
}

}  // namespace

GreedyResult greedy_place(const Scenario& scenario, const RadioParams& params,
                          const PowerProfile& profile, PowerModel model,
                          const Grid& grid) {
    scenario.validate();
    params.validate();
    profile.validate();

    const std::size_t n = scenario.nodes.size();
    const std::size_t cells = static_cast<std::size_t>(grid.count());
    const double p_req = required_power(profile);

    JointPowerCache cache(model, params, scenario.nodes,
                          disk_radius_for(model, params, profile));

    // One contribution per (grid point, node) pair, computed once up front;
    // every greedy round then costs O(cells * nodes) arithmetic.
    std::vector<ChargerContribution> contrib(cells * n);
    for (int ix = 0; ix < grid.nx; ++ix) {
        for (int iy = 0; iy < grid.ny; ++iy) {
            const std::size_t cell = static_cast<std::size_t>(ix) * grid.ny + iy;
            const Point g = grid.point(ix, iy);
            for (std::size_t i = 0; i < n; ++i)
                contrib[cell * n + i] = cache.contribution(g, i);
        }
    }

    GreedyResult result;
    result.matrix = PlacementMatrix(grid.nx, grid.ny);

    std::size_t satisfied = 0;
    while (satisfied < n) {
        std::size_t best_cell = 0;
        std::size_t best_count = 0;
        double best_margin = -1.0;
        for (std::size_t cell = 0; cell < cells; ++cell) {
            const ChargerContribution* row = &contrib[cell * n];
            std::size_t count = 0;
            double margin = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double p = cache.node_power_with(i, row[i]);
                if (p >= p_req) {
                    ++count;
                    margin += p_req;
                } else {
                    margin += p;
                }
            }
            if (count > best_count || (count == best_count && margin > best_margin)) {
                best_cell = cell;
                best_count = count;
                best_margin = margin;
            }
        }

        if (best_count <= satisfied) {
            std::vector<std::size_t> unsatisfied;
            for (std::size_t i = 0; i < n; ++i)
                if (cache.node_power(i) < p_req) unsatisfied.push_back(i);
            std::string msg = "greedy_place: no grid point raises the satisfied count (" +
                              std::to_string(satisfied) + "/" + std::to_string(n) +
                              "); unsatisfiable nodes:";
            for (std::size_t i : unsatisfied) msg += " " + std::to_string(i);
            throw infeasible_error(msg, std::move(unsatisfied));
        }

        const int ix = static_cast<int>(best_cell) / grid.ny;
        const int iy = static_cast<int>(best_cell) % grid.ny;
        const Point chosen = grid.point(ix, iy);
        result.matrix.at(ix, iy) += 1;
        result.placement.chargers.push_back(chosen);
        cache.add_charger(chosen);

        satisfied = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (cache.node_power(i) >= p_req) ++satisfied;
    }

    return result;
}

std::vector<std::size_t> satisfied_set(const Scenario& scenario,
                                       const Placement& placement,
                                       const RadioParams& params,
                                       const PowerProfile& profile,
                                       PowerModel model) {
    const double p_req = required_power(profile);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < scenario.nodes.size(); ++i) {
        const double p = joint_power(model, params, profile, scenario.nodes[i],
                                     placement.chargers);
        if (p >= p_req) out.push_back(i);
    }
    return out;
}

}  // namespace rfplace
