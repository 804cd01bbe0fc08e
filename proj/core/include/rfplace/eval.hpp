#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rfplace/cluster.hpp"
#include "rfplace/greedy.hpp"
#include "rfplace/model.hpp"
#include "rfplace/scenario.hpp"

namespace rfplace {

// Per-node feasibility report. `verify` recomputes every power from scratch
// through the plain model functions, independent of any solver-side caching,
// so it can be trusted as the arbiter of a placement.
struct EvaluationReport {
    std::vector<double> per_node_power_w;
    std::vector<bool> per_node_feasible;
    double sustainable_ratio = 0.0;
    int charger_count = 0;
    PowerModel model = PowerModel::superposition;
    double alpha = 0.0;
};

EvaluationReport verify(const Placement& placement, const Scenario& scenario,
                        const RadioParams& params, const PowerProfile& profile,
                        PowerModel model);

// One row of a two-reader validation measurement. All powers in mW as they
// are recorded in the datasets; distances in meters.
struct ValidationRecord {
    double d1_m = 0.0;
    double d2_m = 0.0;
    double p1_mw = 0.0;
    double p2_mw = 0.0;
    double p_joint_measured_mw = 0.0;
    // filled by validate_tables
    double p_sum_mw = 0.0;
    double p_model_mw = 0.0;
    double err_sum_mw = 0.0;    // p_sum - measured joint
    double err_model_mw = 0.0;  // p_model - measured joint
};

// Fills the scalar-sum and phasor predictions plus their signed errors
// against the measured joint power for every row.
std::vector<ValidationRecord> validate_tables(std::vector<ValidationRecord> rows,
                                              double lambda_m);

// CSV with header d1,d2,p1,p2,p_joint (powers in mW); '#' lines are
// comments. Throws parse_error naming the offending row.
std::vector<ValidationRecord> load_validation_csv(const std::filesystem::path& path);
std::string validation_csv(const std::vector<ValidationRecord>& rows);

enum class Algorithm {
    greedy,
    pso,
    pso_dnc,
};

std::string to_string(Algorithm algo);
Algorithm algorithm_from_string(const std::string& name);

struct SweepOptions {
    std::vector<double> alphas;
    std::vector<Algorithm> algorithms;
    int seeds_per_cell = 1;   // randomized algorithms run this many seeds per cell
    std::uint64_t base_seed = 1;
    double grid_cell_m = 0.1;
    DncConfig dnc;
    int jobs = 1;
};

// One (algorithm, alpha, seed) run of a sweep. Infeasible cells carry the
// error text instead of aborting the sweep.
struct SweepRow {
    Algorithm algorithm = Algorithm::greedy;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    int chargers = -1;
    double sustainable_ratio = 0.0;
    bool feasible = false;
    std::string error;
};

// Runs every (algorithm, alpha, seed) cell against the scenario, verifying
// each resulting placement. Cell seeds are derived from base_seed so rows
// are independent and the whole table reproduces exactly; `jobs` > 1 runs
// cells concurrently without changing the result.
std::vector<SweepRow> sweep(const Scenario& scenario, const RadioParams& params,
                            const PowerProfile& profile_base, PowerModel model,
                            const SweepOptions& options);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace rfplace
