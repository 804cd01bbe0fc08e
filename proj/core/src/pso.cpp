#include "rfplace/pso.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rfplace/errors.hpp"
#include "rfplace/power_cache.hpp"
#include "rfplace/rng.hpp"

namespace rfplace {

void PsoConfig::validate() const {
    if (swarm_size < 2) throw std::invalid_argument("PsoConfig: swarm_size must be >= 2");
    if (max_iters < 1) throw std::invalid_argument("PsoConfig: max_iters must be >= 1");
    if (!(inertia > 0.0 && phi_p > 0.0 && phi_g > 0.0))
        throw std::invalid_argument("PsoConfig: inertia and phi coefficients must be positive");
    if (max_k < 0) throw std::invalid_argument("PsoConfig: max_k must be >= 0");
}

bool SearchSpace::accepts(std::span<const double> position) const {
    if (!disc) return true;
    for (std::size_t i = 0; i + 1 < position.size(); i += 2)
        if (!disc->contains({position[i], position[i + 1]})) return false;
    return true;
}

namespace {

double span_of_dim(const Rect& box, std::size_t dim) {
    return (dim % 2 == 0) ? box.width() : box.height();
}

double lo_of_dim(const Rect& box, std::size_t dim) {
    return (dim % 2 == 0) ? box.x0 : box.y0;
}

double hi_of_dim(const Rect& box, std::size_t dim) {
    return (dim % 2 == 0) ? box.x1 : box.y1;
}

Point sample_position(const SearchSpace& space, std::mt19937_64& rng) {
    for (int tries = 0; tries < 10000; ++tries) {
        Point p{uniform(rng, space.box.x0, space.box.x1),
                uniform(rng, space.box.y0, space.box.y1)};
        if (!space.disc || space.disc->contains(p)) return p;
    }
    // box and disc barely overlap; the disc center is always valid
    return space.box.clamp(space.disc->center);
}

}  // namespace

Swarm make_swarm(const SearchSpace& space, int k, const PsoConfig& config,
                 const FitnessFn& fitness) {
    config.validate();
    if (k < 1) throw std::invalid_argument("make_swarm: k must be >= 1");

    Swarm swarm;
    swarm.space = space;
    swarm.k = k;
    const std::size_t dims = static_cast<std::size_t>(2 * k);
    swarm.particles.resize(static_cast<std::size_t>(config.swarm_size));
    swarm.rngs.reserve(swarm.particles.size());

    for (std::size_t p = 0; p < swarm.particles.size(); ++p)
        swarm.rngs.emplace_back(derive_seed(config.seed, p));

    for (std::size_t p = 0; p < swarm.particles.size(); ++p) {
        Particle& particle = swarm.particles[p];
        std::mt19937_64& rng = swarm.rngs[p];
        particle.position.resize(dims);
        particle.velocity.resize(dims);
        for (int pair = 0; pair < k; ++pair) {
            const Point pos = sample_position(space, rng);
            particle.position[2 * pair] = pos.x;
            particle.position[2 * pair + 1] = pos.y;
        }
        for (std::size_t d = 0; d < dims; ++d) {
            const double half = span_of_dim(space.box, d) / 2.0;
            particle.velocity[d] = uniform(rng, -half, half);
        }
        particle.best_position = particle.position;
        particle.best_fitness = fitness(particle.position);
    }

    swarm.best_position = swarm.particles[0].best_position;
    swarm.best_fitness = swarm.particles[0].best_fitness;
    for (const Particle& particle : swarm.particles) {
        if (better(particle.best_fitness, swarm.best_fitness)) {
            swarm.best_fitness = particle.best_fitness;
            swarm.best_position = particle.best_position;
        }
    }
    return swarm;
}

void pso_step(Swarm& swarm, const PsoConfig& config, const FitnessFn& fitness) {
    for (std::size_t p = 0; p < swarm.particles.size(); ++p) {
        Particle& particle = swarm.particles[p];
        std::mt19937_64& rng = swarm.rngs[p];
        const std::size_t dims = particle.position.size();
        for (std::size_t d = 0; d < dims; ++d) {
            const double r_p = uniform01(rng);
            const double r_g = uniform01(rng);
            particle.velocity[d] =
                config.inertia * particle.velocity[d] +
                config.phi_p * r_p * (particle.best_position[d] - particle.position[d]) +
                config.phi_g * r_g * (swarm.best_position[d] - particle.position[d]);
            particle.position[d] += particle.velocity[d];
            const double lo = lo_of_dim(swarm.space.box, d);
            const double hi = hi_of_dim(swarm.space.box, d);
            if (particle.position[d] < lo) {
                particle.position[d] = lo;
                particle.velocity[d] = 0.0;
            } else if (particle.position[d] > hi) {
                particle.position[d] = hi;
                particle.velocity[d] = 0.0;
            }
        }
        const Fitness fit = fitness(particle.position);
        if (better(fit, particle.best_fitness)) {
            particle.best_fitness = fit;
            particle.best_position = particle.position;
        }
    }
    // serial reduction at sweep end keeps the result independent of how the
    // per-particle evaluations are scheduled
    for (const Particle& particle : swarm.particles) {
        if (better(particle.best_fitness, swarm.best_fitness)) {
            swarm.best_fitness = particle.best_fitness;
            swarm.best_position = particle.best_position;
        }
    }
}

namespace {

std::vector<Point> chargers_from(std::span<const double> position) {
    std::vector<Point> chargers;
    chargers.reserve(position.size() / 2);
    for (std::size_t i = 0; i + 1 < position.size(); i += 2)
        chargers.push_back({position[i], position[i + 1]});
    return chargers;
}

std::optional<double> disk_radius_for(PowerModel model, const RadioParams& params,
                                      const PowerProfile& profile) {
    if (model != PowerModel::disk) return std::nullopt;
    return pattern_radii(params, profile).r1_m;
}

}  // namespace

PsoPlaceResult pso_place(const Scenario& scenario, const Rect& region,
                         const RadioParams& params, const PowerProfile& profile,
                         PowerModel model, const PsoConfig& config,
                         const Placement& fixed_chargers,
                         std::span<const std::size_t> targets,
                         std::optional<Disc> disc) {
    scenario.validate();
    params.validate();
    profile.validate();
    config.validate();
    if (!(region.width() > 0.0) || !(region.height() > 0.0))
        throw std::invalid_argument("pso_place: empty search region");

    std::vector<std::size_t> all_targets;
    if (targets.empty()) {
        all_targets.resize(scenario.nodes.size());
        std::iota(all_targets.begin(), all_targets.end(), std::size_t{0});
        targets = all_targets;
    }

    std::vector<Point> target_points;
    target_points.reserve(targets.size());
    for (std::size_t i : targets) target_points.push_back(scenario.nodes.at(i));

    const double p_req = required_power(profile);
    JointPowerCache cache(model, params, target_points,
                          disk_radius_for(model, params, profile));
    for (const Point& c : fixed_chargers.chargers) cache.add_charger(c);

    const int target_count = static_cast<int>(targets.size());
    const auto count_satisfied = [&](std::span<const Point> extra) {
        Fitness fit{0, 0.0};
        for (std::size_t i = 0; i < target_points.size(); ++i) {
            const double p = cache.node_power_with(i, extra);
            if (p >= p_req) {
                ++fit.satisfied;
                fit.margin += p_req;
            } else {
                fit.margin += p;
            }
        }
        return fit;
    };

    PsoPlaceResult result;
    const Fitness from_fixed = count_satisfied({});
    if (from_fixed.satisfied == target_count) {
        result.k = 0;
        result.best = from_fixed;
        return result;
    }

    const SearchSpace space{region, disc};
    const int max_k = config.max_k > 0 ? config.max_k : 4 * target_count;
    const Fitness rejected{-1, -std::numeric_limits<double>::infinity()};

    std::vector<Point> scratch;
    const FitnessFn fitness = [&](std::span<const double> position) {
        if (!space.accepts(position)) return rejected;
        scratch.clear();
        for (std::size_t i = 0; i + 1 < position.size(); i += 2)
            scratch.push_back({position[i], position[i + 1]});
        return count_satisfied(scratch);
    };

    for (int k = 1; k <= max_k; ++k) {
        PsoConfig attempt_config = config;
        attempt_config.seed = derive_seed(config.seed, static_cast<std::uint64_t>(k), 0x6b);
        Swarm swarm = make_swarm(space, k, attempt_config, fitness);
        for (int iter = 0; iter < config.max_iters &&
                           swarm.best_fitness.satisfied < target_count;
             ++iter) {
            pso_step(swarm, attempt_config, fitness);
        }
        result.attempts.push_back({k, swarm.best_fitness});
        if (swarm.best_fitness.satisfied == target_count) {
            result.k = k;
            result.best = swarm.best_fitness;
            result.placement.chargers = chargers_from(swarm.best_position);
            return result;
        }
    }

    std::vector<std::size_t> unsatisfied;
    for (std::size_t i = 0; i < target_points.size(); ++i)
        if (cache.node_power(i) < p_req) unsatisfied.push_back(targets[i]);
    throw infeasible_error(
        "pso_place: no placement of up to " + std::to_string(max_k) +
            " chargers satisfies all " + std::to_string(target_count) + " target nodes",
        std::move(unsatisfied));
}

}  // namespace rfplace
