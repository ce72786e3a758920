#pragma once

#include <string>

#include "gripperforge/errors.hpp"

// Closed-form Euler-Bernoulli analysis of one gripper leg, modeled as a
// cantilever rod of circular cross section with a point load at the free end.
// All quantities are SI (m, N, Pa, rad).

namespace gripperforge::mechanics {

// Elastic/strength constants of the leg material.
struct Material {
    std::string name;
    double young_modulus_Pa = 0.0;
    double yield_strength_Pa = 0.0;

    Material(std::string name_, double young_modulus_Pa_, double yield_strength_Pa_);
};

// Point-load scenario: force F at the free end of a rod of length L and
// diameter D. Zero force is a legal query; nonpositive geometry is not.
struct BeamLoadCase {
    double force_N = 0.0;
    double arm_length_m = 0.0;
    double diameter_m = 0.0;

    BeamLoadCase(double force_N_, double arm_length_m_, double diameter_m_);
};

// Section location: x measured from the fixed end, y from the neutral axis.
struct SectionQuery {
    double x_m = 0.0;
    double y_m = 0.0;
};

struct BeamResult {
    double sigma_max_Pa = 0.0;
    double delta_max_m = 0.0;
    double theta_max_rad = 0.0;
    double safety_margin = 0.0; // (sigma_yield - sigma_max) / sigma_yield
};

// Area moment of inertia of the circular section, pi*D^4/64.
double second_moment_of_area(double diameter_m);

// sigma(x,y) = M(x)*y / I with M(x) = F*(L-x), reported as a magnitude.
// Throws DomainError when the query leaves the beam.
double bending_stress_at(const BeamLoadCase& c, const SectionQuery& q);

// Outer-fiber stress at the fixed end, 32*F*L / (pi*D^3).
double max_bending_stress(const BeamLoadCase& c);

// delta(x) = F*x^2*(3L - x) / (6*E*I). Throws DomainError for x outside [0, L].
double deflection_at(const BeamLoadCase& c, const Material& m, double x_m);

// Free-end deflection, 64*F*L^3 / (3*pi*E*D^4).
double max_deflection(const BeamLoadCase& c, const Material& m);

// Free-end slope of the deflection curve, 32*F*L^2 / (pi*E*D^4), radians.
double max_slope(const BeamLoadCase& c, const Material& m);

// Fraction of yield strength left in reserve; negative when overstressed.
double safety_margin(double sigma_max_Pa, const Material& m);

BeamResult analyze(const BeamLoadCase& c, const Material& m);

} // namespace gripperforge::mechanics
