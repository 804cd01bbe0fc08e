#include "rfplace/power_cache.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rfplace {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();
}  // namespace

JointPowerCache::JointPowerCache(PowerModel model, const RadioParams& params,
                                 std::span<const Point> nodes,
                                 std::optional<double> disk_radius_m)
    : model_(model),
      rho_(params.rho()),
      eps_(params.epsilon_m),
      phase_per_meter_(two_pi / params.lambda_m),
      disk_radius_(disk_radius_m.value_or(0.0)),
      nodes_(nodes.begin(), nodes.end()) {
    if (model_ == PowerModel::disk && !disk_radius_m)
        throw std::invalid_argument("JointPowerCache: disk model needs a coverage radius");
    sa_.assign(nodes_.size(), model_ == PowerModel::disk ? inf : 0.0);
    if (model_ == PowerModel::superposition) sb_.assign(nodes_.size(), 0.0);
}

ChargerContribution JointPowerCache::contribution(Point charger, std::size_t node) const {
    const double d = distance(nodes_[node], charger);
    switch (model_) {
        case PowerModel::superposition: {
            const double r = d + eps_;
            const double inv = 1.0 / (r * r);
            const double theta = phase_per_meter_ * d;
            return {std::cos(theta) * inv, std::sin(theta) * inv};
        }
        case PowerModel::summation: {
            const double r = d + eps_;
            return {1.0 / (r * r), 0.0};
        }
        case PowerModel::disk:
            return {d, 0.0};
    }
    return {};
}

void JointPowerCache::add_charger(Point charger) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const ChargerContribution c = contribution(charger, i);
        switch (model_) {
            case PowerModel::superposition:
                sa_[i] += c.a;
                sb_[i] += c.b;
                break;
            case PowerModel::summation:
                sa_[i] += c.a;
                break;
            case PowerModel::disk:
                sa_[i] = std::fmin(sa_[i], c.a);
                break;
        }
    }
    ++committed_;
}

double JointPowerCache::node_power(std::size_t node) const {
    switch (model_) {
        case PowerModel::superposition:
            // same form as node_power_with so committed and candidate
            // evaluations agree bit for bit
            return rho_ * std::sqrt(sa_[node] * sa_[node] + sb_[node] * sb_[node]);
        case PowerModel::summation:
            return rho_ * sa_[node];
        case PowerModel::disk: {
            const double dmin = sa_[node];
            if (dmin > disk_radius_) return 0.0;
            const double r = dmin + eps_;
            return rho_ / (r * r);
        }
    }
    return 0.0;
}

double JointPowerCache::node_power_with(std::size_t node,
                                        const ChargerContribution& extra) const {
    switch (model_) {
        case PowerModel::superposition: {
            const double re = sa_[node] + extra.a;
            const double im = sb_[node] + extra.b;
            return rho_ * std::sqrt(re * re + im * im);
        }
        case PowerModel::summation:
            return rho_ * (sa_[node] + extra.a);
        case PowerModel::disk: {
            const double dmin = std::fmin(sa_[node], extra.a);
            if (dmin > disk_radius_) return 0.0;
            const double r = dmin + eps_;
            return rho_ / (r * r);
        }
    }
    return 0.0;
}

double JointPowerCache::node_power_with(std::size_t node,
                                        std::span<const Point> extra) const {
    switch (model_) {
        case PowerModel::superposition: {
            double re = sa_[node], im = sb_[node];
            for (const Point& c : extra) {
                const ChargerContribution k = contribution(c, node);
                re += k.a;
                im += k.b;
            }
            return rho_ * std::sqrt(re * re + im * im);
        }
        case PowerModel::summation: {
            double sum = sa_[node];
            for (const Point& c : extra) sum += contribution(c, node).a;
            return rho_ * sum;
        }
        case PowerModel::disk: {
            double dmin = sa_[node];
            for (const Point& c : extra) dmin = std::fmin(dmin, contribution(c, node).a);
            if (dmin > disk_radius_) return 0.0;
            const double r = dmin + eps_;
            return rho_ / (r * r);
        }
    }
    return 0.0;
}

}  // namespace rfplace
