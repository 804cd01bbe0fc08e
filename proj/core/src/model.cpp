#include "rfplace/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rfplace {

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace

double RadioParams::rho() const {
    const double gs = db_to_linear(gs_dbi);
    const double gr = db_to_linear(gr_dbi);
    const double lp = db_to_linear(lp_db);
    const double lam_over_4pi = lambda_m / (4.0 * std::numbers::pi);
    return eta * gs * gr * ps_w / lp * lam_over_4pi * lam_over_4pi;
}

void RadioParams::validate() const {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument("RadioParams: eta must be in (0,1]");
    if (!(lambda_m > 0.0))
        throw std::invalid_argument("RadioParams: lambda_m must be positive");
    if (!(ps_w > 0.0))
        throw std::invalid_argument("RadioParams: ps_w must be positive");
    if (!(epsilon_m > 0.0))
        throw std::invalid_argument("RadioParams: epsilon_m must be positive");
    if (!(rho() > 0.0))
        throw std::invalid_argument("RadioParams: derived rho must be positive");
}

RadioParams RadioParams::wisp_defaults() {
    RadioParams p;
    p.eta = 0.3;
    p.gs_dbi = 8.0;
    p.gr_dbi = 2.0;
    p.lp_db = 3.0;
    p.lambda_m = 0.33;
    p.ps_w = 1.0;
    p.epsilon_m = 0.2316;
    return p;
}

void PowerProfile::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("PowerProfile: alpha must be in (0,1]");
    if (!(pq_w > 0.0))
        throw std::invalid_argument("PowerProfile: pq_w must be positive");
    if (!(pa_w > pq_w))
        throw std::invalid_argument("PowerProfile: pa_w must exceed pq_w");
}

PowerProfile PowerProfile::wisp_defaults() {
    PowerProfile p;
    p.pa_w = 1.08e-3;
    p.pq_w = 1.8e-6;
    p.alpha = 0.5;
    return p;
}

std::string to_string(PowerModel model) {
    switch (model) {
        case PowerModel::superposition: return "superposition";
        case PowerModel::summation: return "summation";
        case PowerModel::disk: return "disk";
    }
    return "?";
}

PowerModel power_model_from_string(const std::string& name) {
    if (name == "superposition") return PowerModel::superposition;
    if (name == "summation") return PowerModel::summation;
    if (name == "disk") return PowerModel::disk;
    throw std::invalid_argument("unknown power model: " + name);
}

double single_charger_power(const RadioParams& params, double d_m) {
    if (d_m < 0.0) throw std::domain_error("single_charger_power: negative distance");
    const double r = d_m + params.epsilon_m;
    return params.rho() / (r * r);
}

PhasorContribution phasor_contribution(const RadioParams& params, double d_m) {
    return {single_charger_power(params, d_m), two_pi * d_m / params.lambda_m};
}

double required_power(const PowerProfile& profile) {
    return profile.alpha * profile.pa_w + (1.0 - profile.alpha) * profile.pq_w;
}

double joint_power(PowerModel model, const RadioParams& params, Point node,
                   std::span<const Point> chargers,
                   std::optional<double> disk_radius_m) {
    if (chargers.empty()) return 0.0;
    const double eps = params.epsilon_m;

    switch (model) {
        case PowerModel::superposition: {
            // orthogonal decomposition of the phasor sum
            double re = 0.0, im = 0.0;
            for (const Point& c : chargers) {
                const double d = distance(node, c);
                const double r = d + eps;
                const double inv = 1.0 / (r * r);
                const double theta = two_pi * d / params.lambda_m;
                re += std::cos(theta) * inv;
                im += std::sin(theta) * inv;
            }
            return params.rho() * std::sqrt(re * re + im * im);
        }
        case PowerModel::summation: {
            double sum = 0.0;
            for (const Point& c : chargers) {
                const double r = distance(node, c) + eps;
                sum += 1.0 / (r * r);
            }
            return params.rho() * sum;
        }
        case PowerModel::disk: {
            if (!disk_radius_m)
                throw std::invalid_argument("joint_power: disk model needs a coverage radius");
            double dmin = distance(node, chargers[0]);
            for (const Point& c : chargers.subspan(1))
                dmin = std::fmin(dmin, distance(node, c));
            if (dmin > *disk_radius_m) return 0.0;
            const double r = dmin + eps;
            return params.rho() / (r * r);
        }
    }
    return 0.0;
}

double joint_power(PowerModel model, const RadioParams& params,
                   const PowerProfile& profile, Point node,
                   std::span<const Point> chargers) {
    std::optional<double> radius;
    if (model == PowerModel::disk) radius = pattern_radii(params, profile).r1_m;
    return joint_power(model, params, node, chargers, radius);
}

double combine_measured(double p1, double p2, double d1_m, double d2_m,
                        double lambda_m) {
    if (p1 < 0.0 || p2 < 0.0)
        throw std::domain_error("combine_measured: negative power");
    if (d1_m < 0.0 || d2_m < 0.0)
        throw std::domain_error("combine_measured: negative distance");
    if (!(lambda_m > 0.0))
        throw std::domain_error("combine_measured: wavelength must be positive");
    // |d1-d2| keeps the expression bit-for-bit symmetric under swapping
    const double phase_diff = two_pi * std::fabs(d1_m - d2_m) / lambda_m;
    return std::sqrt(p1 * p1 + p2 * p2 + 2.0 * p1 * p2 * std::cos(phase_diff));
}

double contributive_radius(const RadioParams& params, const PowerProfile& profile,
                           double delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("contributive_radius: delta must be in (0,1]");
    const double radius =
        std::sqrt(params.rho() / (delta * required_power(profile))) - params.epsilon_m;
    if (!(radius > 0.0))
        throw std::domain_error("contributive_radius: degenerate region (R <= 0)");
    return radius;
}

PatternRadii pattern_radii(const RadioParams& params, const PowerProfile& profile) {
    const double preq = required_power(profile);
    const double eps = params.epsilon_m;
    PatternRadii radii;
    radii.r1_m = std::sqrt(params.rho() / preq) - eps;
    radii.r3_m = std::sqrt(3.0 * params.rho() / preq) - eps;
    return radii;
}

}  // namespace rfplace
