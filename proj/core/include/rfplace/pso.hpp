#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "rfplace/model.hpp"
#include "rfplace/scenario.hpp"

namespace rfplace {

struct PsoConfig {
    double inertia = 0.7298;      // w
    double phi_p = 1.49618;       // cognitive coefficient
    double phi_g = 1.49618;       // social coefficient
    int swarm_size = 40;
    int max_iters = 200;          // per charger count k
    std::uint64_t seed = 1;
    int max_k = 0;                // 0 = 4 * number of target nodes

    void validate() const;
};

// Lexicographic placement quality: satisfied node count first, then the
// clamped power margin sum_i min(P_h_i, P_req) as a continuous tie-break.
struct Fitness {
    int satisfied = -1;
    double margin = -std::numeric_limits<double>::infinity();
};

constexpr bool better(const Fitness& a, const Fitness& b) {
    return a.satisfied > b.satisfied ||
           (a.satisfied == b.satisfied && a.margin > b.margin);
}

// Search domain for k chargers: the box, plus an optional disc that
// candidate charger positions must fall in (violations score as worst
// possible fitness rather than being clamped).
struct SearchSpace {
    Rect box;
    std::optional<Disc> disc;

    bool accepts(std::span<const double> position) const;
};

// Candidate solution: k charger coordinate pairs flattened to
// {x1,y1,...,xk,yk}.
struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> best_position;
    Fitness best_fitness;
};

using FitnessFn = std::function<Fitness(std::span<const double>)>;

struct Swarm {
    SearchSpace space;
    int k = 0;
    std::vector<Particle> particles;
    std::vector<std::mt19937_64> rngs;  // one stream per particle
    std::vector<double> best_position;
    Fitness best_fitness;
};

// Positions uniform over the space (disc honored by rejection sampling),
// velocities uniform in +-span/2 per dimension, bests taken from the
// initial evaluation.
Swarm make_swarm(const SearchSpace& space, int k, const PsoConfig& config,
                 const FitnessFn& fitness);

// One synchronous update sweep:
//   v <- w*v + phi_p*r_p.(pbest - x) + phi_g*r_g.(gbest - x);  x <- x + v
// with fresh U(0,1) vectors r_p, r_g per particle, positions clamped to the
// box (clamped components zero their velocity), personal bests updated on
// strict improvement, and the global best reduced at the end of the sweep.
void pso_step(Swarm& swarm, const PsoConfig& config, const FitnessFn& fitness);

struct KAttempt {
    int k = 0;
    Fitness best;
};

struct PsoPlaceResult {
    Placement placement;   // the k new chargers (fixed chargers excluded)
    int k = 0;
    Fitness best;
    std::vector<KAttempt> attempts;  // one entry per tried charger count
};

// Incremental-k search: run a fresh swarm for k = 1, 2, ... until the best
// candidate satisfies every target node, counting `fixed_chargers` into the
// joint power but never returning them. Targets are node indices into the
// scenario (empty span = all nodes); if the fixed chargers already satisfy
// all targets the result is k = 0 with an empty placement. Throws
// infeasible_error when k exceeds the cap.
PsoPlaceResult pso_place(const Scenario& scenario, const Rect& region,
                         const RadioParams& params, const PowerProfile& profile,
                         PowerModel model, const PsoConfig& config,
                         const Placement& fixed_chargers,
                         std::span<const std::size_t> targets = {},
                         std::optional<Disc> disc = std::nullopt);

}  // namespace rfplace
