#include "rfplace/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "rfplace/errors.hpp"

namespace rfplace {

using nlohmann::json;

void RunConfig::validate() const {
    radio.validate();
    power.validate();
    pso.validate();
    if (!(grid_cell_m > 0.0))
        throw std::invalid_argument("RunConfig: grid cell size must be positive");
    if (!(dnc_delta > 0.0 && dnc_delta < 1.0))
        throw std::invalid_argument("RunConfig: dnc delta must be in (0,1)");
}

namespace {

void expect_keys(const json& obj, std::initializer_list<const char*> allowed,
                 const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* name : allowed)
            if (key == name) known = true;
        if (!known) throw parse_error(where + ": unknown key '" + key + "'");
    }
}

void get_if(const json& obj, const char* key, double& out) {
    if (obj.contains(key)) out = obj.at(key).get<double>();
}

void get_if(const json& obj, const char* key, int& out) {
    if (obj.contains(key)) out = obj.at(key).get<int>();
}

void get_if(const json& obj, const char* key, std::uint64_t& out) {
    if (obj.contains(key)) out = obj.at(key).get<std::uint64_t>();
}

}  // namespace

RunConfig load_run_config(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
    if (!j.is_object()) throw parse_error(path.string() + ": config must be an object");
    expect_keys(j, {"radio", "power", "model", "grid", "pso", "dnc"}, path.string());

    try {
        if (j.contains("radio")) {
            const json& r = j.at("radio");
            expect_keys(r, {"eta", "gs_dbi", "gr_dbi", "lp_db", "lambda_m", "ps_w", "epsilon_m"},
                        "radio");
            get_if(r, "eta", base.radio.eta);
            get_if(r, "gs_dbi", base.radio.gs_dbi);
            get_if(r, "gr_dbi", base.radio.gr_dbi);
            get_if(r, "lp_db", base.radio.lp_db);
            get_if(r, "lambda_m", base.radio.lambda_m);
            get_if(r, "ps_w", base.radio.ps_w);
            get_if(r, "epsilon_m", base.radio.epsilon_m);
        }
        if (j.contains("power")) {
            const json& p = j.at("power");
            expect_keys(p, {"pa_w", "pq_w", "alpha"}, "power");
            get_if(p, "pa_w", base.power.pa_w);
            get_if(p, "pq_w", base.power.pq_w);
            get_if(p, "alpha", base.power.alpha);
        }
        if (j.contains("model"))
            base.model = power_model_from_string(j.at("model").get<std::string>());
        if (j.contains("grid")) {
            const json& g = j.at("grid");
            expect_keys(g, {"cell_size_m"}, "grid");
            get_if(g, "cell_size_m", base.grid_cell_m);
        }
        if (j.contains("pso")) {
            const json& p = j.at("pso");
            expect_keys(p, {"inertia", "phi_p", "phi_g", "swarm_size", "max_iters", "seed",
                            "max_k"},
                        "pso");
            get_if(p, "inertia", base.pso.inertia);
            get_if(p, "phi_p", base.pso.phi_p);
            get_if(p, "phi_g", base.pso.phi_g);
            get_if(p, "swarm_size", base.pso.swarm_size);
            get_if(p, "max_iters", base.pso.max_iters);
            get_if(p, "seed", base.pso.seed);
            get_if(p, "max_k", base.pso.max_k);
        }
        if (j.contains("dnc")) {
            const json& d = j.at("dnc");
            expect_keys(d, {"delta"}, "dnc");
            get_if(d, "delta", base.dnc_delta);
        }
    } catch (const json::exception& e) {
        throw parse_error(path.string() + ": " + e.what());
    }

    try {
        base.validate();
    } catch (const std::invalid_argument& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
    return base;
}

std::string run_config_json(const RunConfig& config) {
    json j;
    j["radio"] = {{"eta", config.radio.eta},
                  {"gs_dbi", config.radio.gs_dbi},
                  {"gr_dbi", config.radio.gr_dbi},
                  {"lp_db", config.radio.lp_db},
                  {"lambda_m", config.radio.lambda_m},
                  {"ps_w", config.radio.ps_w},
                  {"epsilon_m", config.radio.epsilon_m}};
    j["power"] = {{"pa_w", config.power.pa_w},
                  {"pq_w", config.power.pq_w},
                  {"alpha", config.power.alpha}};
    j["model"] = to_string(config.model);
    j["grid"] = {{"cell_size_m", config.grid_cell_m}};
    j["pso"] = {{"inertia", config.pso.inertia},
                {"phi_p", config.pso.phi_p},
                {"phi_g", config.pso.phi_g},
                {"swarm_size", config.pso.swarm_size},
                {"max_iters", config.pso.max_iters},
                {"seed", config.pso.seed},
                {"max_k", config.pso.max_k}};
    j["dnc"] = {{"delta", config.dnc_delta}};
    return j.dump();
}

}  // namespace rfplace
