#pragma once

#include <string>

#include "rfplace/model.hpp"
#include "rfplace/scenario.hpp"

namespace rfplace {

// Reference deployment patterns: equilateral triangle lattices whose
// vertices carry the chargers. The summation-model pattern is sized by r3
// (three circumradius-distant chargers jointly reach P_req); the disk-model
// pattern by r1 (the single-charger reach).
enum class LatticePattern {
    triangle_summation,
    triangle_disk,
};

std::string to_string(LatticePattern pattern);
LatticePattern lattice_pattern_from_string(const std::string& name);

struct LatticeSpec {
    LatticePattern pattern = LatticePattern::triangle_summation;
    double radius_m = 0.0;  // r3 or r1
    Rect field;
};

// The coverage radius the pattern is sized by, from Eq.-(9)-style radii.
double lattice_radius(LatticePattern pattern, const RadioParams& params,
                      const PowerProfile& profile);

// Vertices of an equilateral triangular lattice with side sqrt(3)*radius,
// anchored at the field origin, spanning one pitch beyond the field, with
// outside vertices snapped onto the field boundary (exact duplicates
// dropped). Every field point ends up within `radius` of some charger. A
// radius covering the whole field collapses to one centered charger.
Placement triangle_lattice(const LatticeSpec& spec);

// Fraction of scenario nodes whose joint power under `eval_model` meets
// P_req(alpha).
double evaluate_pattern(const Placement& placement, const Scenario& scenario,
                        const RadioParams& params, const PowerProfile& profile,
                        PowerModel eval_model);

}  // namespace rfplace
