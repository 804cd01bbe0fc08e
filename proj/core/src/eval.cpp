#include "rfplace/eval.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "rfplace/errors.hpp"
#include "rfplace/report.hpp"
#include "rfplace/rng.hpp"

namespace rfplace {

EvaluationReport verify(const Placement& placement, const Scenario& scenario,
                        const RadioParams& params, const PowerProfile& profile,
                        PowerModel model) {
    scenario.validate();
    params.validate();
    profile.validate();

    const double p_req = required_power(profile);
    EvaluationReport report;
    report.model = model;
    report.alpha = profile.alpha;
    report.charger_count = static_cast<int>(placement.chargers.size());
    report.per_node_power_w.reserve(scenario.nodes.size());
    report.per_node_feasible.reserve(scenario.nodes.size());

    std::size_t satisfied = 0;
    for (const Point& node : scenario.nodes) {
        const double p = joint_power(model, params, profile, node, placement.chargers);
        const bool ok = p >= p_req;
        report.per_node_power_w.push_back(p);
        report.per_node_feasible.push_back(ok);
        if (ok) ++satisfied;
    }
    report.sustainable_ratio =
        static_cast<double>(satisfied) / static_cast<double>(scenario.nodes.size());
    return report;
}

std::vector<ValidationRecord> validate_tables(std::vector<ValidationRecord> rows,
                                              double lambda_m) {
    for (ValidationRecord& row : rows) {
        row.p_sum_mw = row.p1_mw + row.p2_mw;
        row.p_model_mw =
            combine_measured(row.p1_mw, row.p2_mw, row.d1_m, row.d2_m, lambda_m);
        row.err_sum_mw = row.p_sum_mw - row.p_joint_measured_mw;
        row.err_model_mw = row.p_model_mw - row.p_joint_measured_mw;
    }
    return rows;
}

std::vector<ValidationRecord> load_validation_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path.string());

    std::vector<ValidationRecord> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "d1,d2,p1,p2,p_joint")
                throw parse_error(path.string() + ":" + std::to_string(line_no) +
                                  ": expected header d1,d2,p1,p2,p_joint");
            header_seen = true;
            continue;
        }
        std::istringstream fields(line);
        std::string cell;
        double values[5];
        for (int i = 0; i < 5; ++i) {
            if (!std::getline(fields, cell, ','))
                throw parse_error(path.string() + ":" + std::to_string(line_no) +
                                  ": row needs 5 fields");
            try {
                values[i] = std::stod(cell);
            } catch (const std::exception&) {
                throw parse_error(path.string() + ":" + std::to_string(line_no) +
                                  ": field " + std::to_string(i + 1) + " is not a number");
            }
        }
        rows.push_back({values[0], values[1], values[2], values[3], values[4]});
    }
    if (!header_seen) throw parse_error(path.string() + ": missing header row");
    return rows;
}

std::string validation_csv(const std::vector<ValidationRecord>& rows) {
    std::string out = "d1,d2,p1,p2,p_joint,p_sum,p_model,err_sum,err_model\n";
    for (const ValidationRecord& r : rows) {
        out += format_double(r.d1_m) + ',' + format_double(r.d2_m) + ',' +
               format_double(r.p1_mw) + ',' + format_double(r.p2_mw) + ',' +
               format_double(r.p_joint_measured_mw) + ',' + format_double(r.p_sum_mw) +
               ',' + format_double(r.p_model_mw) + ',' + format_double(r.err_sum_mw) +
               ',' + format_double(r.err_model_mw) + '\n';
    }
    return out;
}

std::string to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::greedy: return "greedy";
        case Algorithm::pso: return "pso";
        case Algorithm::pso_dnc: return "pso-dc";
    }
    return "?";
}

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "greedy") return Algorithm::greedy;
    if (name == "pso") return Algorithm::pso;
    if (name == "pso-dc") return Algorithm::pso_dnc;
    throw std::invalid_argument("unknown algorithm: " + name);
}

namespace {

SweepRow run_cell(const Scenario& scenario, const RadioParams& params,
                  const PowerProfile& profile_base, PowerModel model,
                  const SweepOptions& options, Algorithm algo, double alpha,
                  std::uint64_t seed) {
    SweepRow row;
    row.algorithm = algo;
    row.alpha = alpha;
    row.seed = seed;

    PowerProfile profile = profile_base;
    profile.alpha = alpha;

    try {
        Placement placement;
        switch (algo) {
            case Algorithm::greedy: {
                const Grid grid = Grid::cover(scenario.field_width_m,
                                              scenario.field_height_m,
                                              options.grid_cell_m);
                placement = greedy_place(scenario, params, profile, model, grid).placement;
                break;
            }
            case Algorithm::pso: {
                PsoConfig config = options.dnc.pso;
                config.seed = seed;
                placement = pso_place(scenario, scenario.field(), params, profile, model,
                                      config, Placement{})
                                .placement;
                break;
            }
            case Algorithm::pso_dnc: {
                DncConfig config = options.dnc;
                config.pso.seed = seed;
                placement = dnc_place(scenario, params, profile, model, config).placement;
                break;
            }
        }
        const EvaluationReport report = verify(placement, scenario, params, profile, model);
        row.chargers = report.charger_count;
        row.sustainable_ratio = report.sustainable_ratio;
        row.feasible = report.sustainable_ratio == 1.0;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::vector<SweepRow> sweep(const Scenario& scenario, const RadioParams& params,
                            const PowerProfile& profile_base, PowerModel model,
                            const SweepOptions& options) {
    if (options.alphas.empty() || options.algorithms.empty())
        throw std::invalid_argument("sweep: needs at least one alpha and one algorithm");
    if (options.seeds_per_cell < 1)
        throw std::invalid_argument("sweep: seeds_per_cell must be >= 1");

    struct Job {
        Algorithm algo;
        double alpha;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (std::size_t ai = 0; ai < options.algorithms.size(); ++ai) {
        const Algorithm algo = options.algorithms[ai];
        const int seeds = algo == Algorithm::greedy ? 1 : options.seeds_per_cell;
        for (std::size_t xi = 0; xi < options.alphas.size(); ++xi)
            for (int s = 0; s < seeds; ++s)
                jobs.push_back({algo, options.alphas[xi],
                                derive_seed(options.base_seed, ai * 1000 + xi,
                                            static_cast<std::uint64_t>(s))});
    }

    std::vector<SweepRow> rows(jobs.size());
    const int workers = std::max(1, options.jobs);
    if (workers == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            rows[i] = run_cell(scenario, params, profile_base, model, options,
                               jobs[i].algo, jobs[i].alpha, jobs[i].seed);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (std::size_t i = next.fetch_add(1); i < jobs.size();
                 i = next.fetch_add(1))
                rows[i] = run_cell(scenario, params, profile_base, model, options,
                                   jobs[i].algo, jobs[i].alpha, jobs[i].seed);
        };
        std::vector<std::future<void>> futures;
        for (int w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, worker));
        for (auto& f : futures) f.get();
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "algorithm,alpha,seed,chargers,sustainable_ratio,feasible,error\n";
    for (const SweepRow& r : rows) {
        std::string error = r.error;
        for (char& c : error)
            if (c == ',' || c == '\n') c = ';';
        out += to_string(r.algorithm) + ',' + format_double(r.alpha) + ',' +
               std::to_string(r.seed) + ',' + std::to_string(r.chargers) + ',' +
               format_double(r.sustainable_ratio) + ',' + (r.feasible ? "1" : "0") +
               ',' + error + '\n';
    }
    return out;
}

}  // namespace rfplace
