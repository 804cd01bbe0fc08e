#pragma once

#include <filesystem>
#include <string>

#include "rfplace/cluster.hpp"
#include "rfplace/model.hpp"
#include "rfplace/pso.hpp"

namespace rfplace {

// Everything a placement run needs besides the scenario. Defaults are the
// measured WISP/Impinj constants; a JSON config file overrides fields
// individually and CLI flags override the file.
struct RunConfig {
    RadioParams radio = RadioParams::wisp_defaults();
    PowerProfile power = PowerProfile::wisp_defaults();
    PowerModel model = PowerModel::superposition;
    double grid_cell_m = 0.1;
    PsoConfig pso;
    double dnc_delta = 0.25;

    DncConfig dnc() const { return {dnc_delta, pso}; }
    void validate() const;
};

// Parses a JSON config {"radio": {...}, "power": {...}, "model": "...",
// "grid": {"cell_size_m": ...}, "pso": {...}, "dnc": {"delta": ...}} on top
// of `base`. Unknown keys are rejected.
RunConfig load_run_config(const std::filesystem::path& path, RunConfig base = {});

// Single-line JSON echo of the effective configuration, for reports.
std::string run_config_json(const RunConfig& config);

}  // namespace rfplace
