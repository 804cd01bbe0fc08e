#pragma once

#include <optional>
#include <span>
#include <string>

#include "rfplace/geometry.hpp"

namespace rfplace {

// Recharge-power physics for RF-powered (RFID/WISP-class) sensor nodes.
//
// A single charger at distance d delivers
//     P_h = eta * Gs*Gr/Lp * (lambda / (4*pi*(d + eps)))^2 * Ps
//         = rho / (d + eps)^2,   rho = eta*Gs*Gr*Ps/Lp * (lambda/(4*pi))^2
// where eps is a short-distance correction that keeps the power finite at
// d = 0. With K chargers on the same frequency, the incident waves add as
// phasors with phase 2*pi*d_k/lambda, so the harvested power is
//     P_h = rho * | sum_k exp(-j*2*pi*d_k/lambda) / (d_k + eps)^2 |
// which is at most the plain per-charger sum and reduces to the single
// charger formula for K = 1.

// Antenna/propagation constants. Gains and polarization loss are stored in
// dB(i) as they are usually quoted and converted to linear scale in rho().
struct RadioParams {
    double eta = 0.0;        // rectification efficiency, (0,1]
    double gs_dbi = 0.0;     // source antenna gain
    double gr_dbi = 0.0;     // receiver antenna gain
    double lp_db = 0.0;      // polarization loss
    double lambda_m = 0.0;   // wavelength
    double ps_w = 0.0;       // charger transmit power
    double epsilon_m = 0.0;  // short-distance correction

    // rho = eta*Gs*Gr*Ps/Lp * (lambda/4pi)^2, in W*m^2
    double rho() const;

    // Throws std::invalid_argument when any constraint is violated.
    void validate() const;

    // Measured constants of a WISP 4.1DL tag charged by an Impinj Speedway
    // reader in the 920-925 MHz band.
    static RadioParams wisp_defaults();
};

// Node power demand. A node that is active a fraction `alpha` of the time
// needs P_req(alpha) = alpha*Pa + (1-alpha)*Pq of continuous recharge power.
struct PowerProfile {
    double pa_w = 0.0;   // active-state draw
    double pq_w = 0.0;   // quiescent-state draw
    double alpha = 0.0;  // duty-cycle factor, (0,1]

    void validate() const;

    // WISP 4.1DL: 600 uA active / 1 uA quiescent at 1.8 V, alpha 0.5.
    static PowerProfile wisp_defaults();
};

// One charger's contribution at a node, as a phasor.
struct PhasorContribution {
    double amplitude_w = 0.0;  // harvested power from this charger alone
    double phase_rad = 0.0;    // 2*pi*d/lambda
};

enum class PowerModel {
    superposition,  // phasor sum (the default model)
    summation,      // scalar sum of per-charger powers
    disk,           // nearest charger only, zero beyond the coverage radius
};

std::string to_string(PowerModel model);
// Accepts "superposition" | "summation" | "disk"; throws std::invalid_argument.
PowerModel power_model_from_string(const std::string& name);

// rho/(d+eps)^2. Throws std::domain_error for d < 0.
double single_charger_power(const RadioParams& params, double d_m);

PhasorContribution phasor_contribution(const RadioParams& params, double d_m);

// P_req(alpha) = alpha*Pa + (1-alpha)*Pq
double required_power(const PowerProfile& profile);

// Joint harvested power at `node` from all `chargers` under `model`.
// An empty charger list yields 0 by convention. The disk model needs its
// coverage radius; the 4-argument overload throws std::invalid_argument if
// it is missing, the PowerProfile overload derives it as r1(alpha).
double joint_power(PowerModel model, const RadioParams& params, Point node,
                   std::span<const Point> chargers,
                   std::optional<double> disk_radius_m = std::nullopt);
double joint_power(PowerModel model, const RadioParams& params,
                   const PowerProfile& profile, Point node,
                   std::span<const Point> chargers);

// Combines two individually measured recharge powers as phasors:
//   || p1*exp(-j*2*pi*d1/lambda) + p2*exp(-j*2*pi*d2/lambda) ||
//   = sqrt(p1^2 + p2^2 + 2*p1*p2*cos(2*pi*(d1-d2)/lambda)).
// Unit-agnostic (homogeneous of degree 1 in p1, p2); equals p1 + p2 exactly
// when d1 == d2. Throws std::domain_error for negative inputs.
double combine_measured(double p1, double p2, double d1_m, double d2_m,
                        double lambda_m);

// Contributive recharge radius: the distance at which a single charger still
// delivers delta * P_req(alpha), i.e. R = sqrt(rho/(delta*P_req)) - eps.
// delta in (0,1]; at delta = 1 this coincides with r1 below. Throws
// std::invalid_argument for delta outside (0,1] and std::domain_error when
// the parameters make the region degenerate (R <= 0).
double contributive_radius(const RadioParams& params, const PowerProfile& profile,
                           double delta);

// Coverage radii used to size baseline triangle lattices:
//   r1 = sqrt(rho/P_req) - eps      (single charger reaches P_req)
//   r3 = sqrt(3*rho/P_req) - eps    (three aligned chargers at the triangle
//                                    circumradius reach P_req)
struct PatternRadii {
    double r1_m = 0.0;
    double r3_m = 0.0;
};
PatternRadii pattern_radii(const RadioParams& params, const PowerProfile& profile);

}  // namespace rfplace
