#include "gripperforge/mechanics.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "gripperforge/units.hpp"

namespace gripperforge::mechanics {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace

Material::Material(std::string name_, double young_modulus_Pa_, double yield_strength_Pa_)
    : name(std::move(name_)),
      young_modulus_Pa(young_modulus_Pa_),
      yield_strength_Pa(yield_strength_Pa_) {
    if (!(young_modulus_Pa > 0.0))
        throw DomainError("Material '" + name + "': young_modulus must be > 0 Pa, got " +
                          num(young_modulus_Pa));
    if (!(yield_strength_Pa > 0.0))
        throw DomainError("Material '" + name + "': yield_strength must be > 0 Pa, got " +
                          num(yield_strength_Pa));
}

BeamLoadCase::BeamLoadCase(double force_N_, double arm_length_m_, double diameter_m_)
    : force_N(force_N_), arm_length_m(arm_length_m_), diameter_m(diameter_m_) {
    if (!(arm_length_m > 0.0))
        throw DomainError("BeamLoadCase: arm_length must be > 0 m, got " + num(arm_length_m));
    if (!(diameter_m > 0.0))
        throw DomainError("BeamLoadCase: diameter must be > 0 m, got " + num(diameter_m));
    if (!(force_N >= 0.0))
        throw DomainError("BeamLoadCase: force must be >= 0 N, got " + num(force_N));
}

double second_moment_of_area(double diameter_m) {
    const double d2 = diameter_m * diameter_m;
    return units::kPi * d2 * d2 / 64.0;
}

double bending_stress_at(const BeamLoadCase& c, const SectionQuery& q) {
    if (q.x_m < 0.0 || q.x_m > c.arm_length_m)
        throw DomainError("bending_stress_at: x = " + num(q.x_m) + " m outside [0, " +
                          num(c.arm_length_m) + "]");
    const double half_d = c.diameter_m / 2.0;
    if (std::abs(q.y_m) > half_d)
        throw DomainError("bending_stress_at: |y| = " + num(std::abs(q.y_m)) +
                          " m exceeds D/2 = " + num(half_d));
    const double moment = c.force_N * (c.arm_length_m - q.x_m);
    return std::abs(moment * q.y_m) / second_moment_of_area(c.diameter_m);
}

double max_bending_stress(const BeamLoadCase& c) {
    const double d3 = c.diameter_m * c.diameter_m * c.diameter_m;
    return 32.0 * c.force_N * c.arm_length_m / (units::kPi * d3);
}

double deflection_at(const BeamLoadCase& c, const Material& m, double x_m) {
    if (x_m < 0.0 || x_m > c.arm_length_m)
        throw DomainError("deflection_at: x = " + num(x_m) + " m outside [0, " +
                          num(c.arm_length_m) + "]");
    const double inertia = second_moment_of_area(c.diameter_m);
    return c.force_N * x_m * x_m * (3.0 * c.arm_length_m - x_m) /
           (6.0 * m.young_modulus_Pa * inertia);
}

double max_deflection(const BeamLoadCase& c, const Material& m) {
    const double l3 = c.arm_length_m * c.arm_length_m * c.arm_length_m;
    const double d2 = c.diameter_m * c.diameter_m;
    const double d4 = d2 * d2;
    return 64.0 * c.force_N * l3 / (3.0 * units::kPi * m.young_modulus_Pa * d4);
}

double max_slope(const BeamLoadCase& c, const Material& m) {
    const double d2 = c.diameter_m * c.diameter_m;
    const double d4 = d2 * d2;
    return 32.0 * c.force_N * c.arm_length_m * c.arm_length_m /
           (units::kPi * m.young_modulus_Pa * d4);
}

double safety_margin(double sigma_max_Pa, const Material& m) {
    return (m.yield_strength_Pa - sigma_max_Pa) / m.yield_strength_Pa;
}

BeamResult analyze(const BeamLoadCase& c, const Material& m) {
    BeamResult r;
    r.sigma_max_Pa = max_bending_stress(c);
    r.delta_max_m = max_deflection(c, m);
    r.theta_max_rad = max_slope(c, m);
    r.safety_margin = safety_margin(r.sigma_max_Pa, m);
    return r;
}

} // namespace gripperforge::mechanics
