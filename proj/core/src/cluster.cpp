#include "rfplace/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rfplace/errors.hpp"

namespace rfplace {

void DncConfig::validate() const {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("DncConfig: delta must be in (0,1)");
    pso.validate();
}

std::vector<Cluster> qt_cluster(const Scenario& scenario, double radius_m) {
    if (!(radius_m > 0.0))
        throw std::invalid_argument("qt_cluster: radius must be positive");
    scenario.validate();

    const std::size_t n = scenario.nodes.size();
    std::vector<bool> clustered(n, false);
    std::size_t remaining = n;
    std::vector<Cluster> clusters;

    std::vector<std::size_t> candidate;
    while (remaining > 0) {
        std::size_t best_head = n;
        std::vector<std::size_t> best_members;
        for (std::size_t head = 0; head < n; ++head) {
            if (clustered[head]) continue;
            candidate.clear();
            for (std::size_t i = 0; i < n; ++i) {
                if (clustered[i]) continue;
                if (distance(scenario.nodes[head], scenario.nodes[i]) <= radius_m)
                    candidate.push_back(i);
            }
            if (candidate.size() > best_members.size()) {
                best_head = head;
                best_members = candidate;
            }
        }

        Cluster cluster;
        cluster.head = best_head;
        cluster.members = std::move(best_members);
        cluster.region = search_region(scenario.nodes[best_head], radius_m, scenario.field());
        for (std::size_t i : cluster.members) clustered[i] = true;
        remaining -= cluster.members.size();
        clusters.push_back(std::move(cluster));
    }
    return clusters;
}

Rect search_region(Point head, double radius_m, const Rect& field) {
    return {std::fmax(field.x0, head.x - radius_m),
            std::fmax(field.y0, head.y - radius_m),
            std::fmin(field.x1, head.x + radius_m),
            std::fmin(field.y1, head.y + radius_m)};
}

DncResult dnc_place(const Scenario& scenario, const RadioParams& params,
                    const PowerProfile& profile, PowerModel model,
                    const DncConfig& config) {
    scenario.validate();
    params.validate();
    profile.validate();
    config.validate();

    const double radius = contributive_radius(params, profile, config.delta);

    DncResult result;
    result.clusters = qt_cluster(scenario, radius);

    for (std::size_t m = 0; m < result.clusters.size(); ++m) {
        const Cluster& cluster = result.clusters[m];
        PsoConfig pso_config = config.pso;
        pso_config.seed = config.pso.seed + m;  // cluster 0 matches a plain pso_place run
        const Disc disc{scenario.nodes[cluster.head], radius};
        try {
            PsoPlaceResult local =
                pso_place(scenario, cluster.region, params, profile, model, pso_config,
                          result.placement, cluster.members, disc);
            result.placement.chargers.insert(result.placement.chargers.end(),
                                             local.placement.chargers.begin(),
                                             local.placement.chargers.end());
        } catch (const infeasible_error& e) {
            throw infeasible_error("dnc_place: cluster " + std::to_string(m) +
                                       " (head node " + std::to_string(cluster.head) +
                                       "): " + e.what(),
                                   e.unsatisfied_nodes());
        }
    }

    // Later chargers can interfere destructively with earlier clusters'
    // nodes, so re-check the whole node set against the final placement and
    // patch any regressions field-wide.
    const double p_req = required_power(profile);
    constexpr int max_repair_passes = 5;
    for (int pass = 0; pass <= max_repair_passes; ++pass) {
        std::vector<std::size_t> violated;
        for (std::size_t i = 0; i < scenario.nodes.size(); ++i) {
            const double p = joint_power(model, params, profile, scenario.nodes[i],
                                         result.placement.chargers);
            if (p < p_req) violated.push_back(i);
        }
        if (violated.empty()) return result;
        if (pass == max_repair_passes)
            throw infeasible_error(
                "dnc_place: repair passes exhausted with " +
                    std::to_string(violated.size()) + " nodes still unsatisfied",
                std::move(violated));

        PsoConfig repair_config = config.pso;
        repair_config.seed =
            config.pso.seed + result.clusters.size() + static_cast<std::uint64_t>(pass);
        PsoPlaceResult repair =
            pso_place(scenario, scenario.field(), params, profile, model, repair_config,
                      result.placement, violated);
        result.placement.chargers.insert(result.placement.chargers.end(),
                                         repair.placement.chargers.begin(),
                                         repair.placement.chargers.end());
        ++result.repair_passes;
    }
    return result;
}

}  // namespace rfplace
