#include "gripperforge/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gripperforge/units.hpp"

namespace gripperforge::envelope {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void check_geometry(const ArmGeometry& geom) {
    if (!(geom.min_arm_m > 0.0))
        throw DomainError("ArmGeometry: min_arm must be > 0 m, got " + num(geom.min_arm_m));
    if (!(geom.reach_m > geom.min_arm_m))
        throw DomainError("ArmGeometry: reach must exceed min_arm, got reach = " +
                          num(geom.reach_m) + ", min_arm = " + num(geom.min_arm_m));
}

} // namespace

void EnvelopeCurve::validate() const {
    if (points.empty())
        throw DomainError("EnvelopeCurve: no sample points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (p.engaged_legs != engaged_legs)
            throw DomainError("EnvelopeCurve: sample leg count mismatch");
        if (!(p.f_max_N > 0.0))
            throw DomainError("EnvelopeCurve: nonpositive force sample");
        if (i > 0) {
            if (!(p.object_height_m > points[i - 1].object_height_m))
                throw DomainError("EnvelopeCurve: heights not strictly increasing");
            if (p.f_max_N < points[i - 1].f_max_N)
                throw DomainError("EnvelopeCurve: force decreases along the curve");
        }
    }
}

double effective_arm_length(double object_height_m, const ArmGeometry& geom) {
    check_geometry(geom);
    if (!(object_height_m > 0.0))
        throw DomainError("effective_arm_length: object_height must be > 0 m, got " +
                          num(object_height_m));
    return std::max(geom.min_arm_m, geom.reach_m - object_height_m);
}

double max_grasp_force(double object_height_m, int engaged_legs, double diameter_m,
                       const mechanics::Material& material, const ArmGeometry& geom) {
    if (engaged_legs < 1)
        throw DomainError("max_grasp_force: engaged_legs must be >= 1, got " +
                          std::to_string(engaged_legs));
    if (!(diameter_m > 0.0))
        throw DomainError("max_grasp_force: diameter must be > 0 m, got " + num(diameter_m));
    const double arm = effective_arm_length(object_height_m, geom);
    const double d3 = diameter_m * diameter_m * diameter_m;
    return units::kPi * static_cast<double>(engaged_legs) * d3 * material.yield_strength_Pa /
           (32.0 * arm);
}

EnvelopeCurve envelope_curve(double h_min_m, double h_max_m, double step_m,
                             int engaged_legs, double diameter_m,
                             const mechanics::Material& material, const ArmGeometry& geom) {
    if (engaged_legs < 1 || engaged_legs > 4)
        throw DomainError("envelope_curve: engaged_legs must be in {1,2,3,4}, got " +
                          std::to_string(engaged_legs));
    if (!(step_m > 0.0))
        throw DomainError("envelope_curve: step must be > 0 m, got " + num(step_m));
    const double tol = step_m * 1e-9;
    if (h_min_m < kMinObjectHeightM - tol || h_max_m > kMaxCurveHeightM + tol)
        throw DomainError("envelope_curve: height range [" + num(h_min_m) + ", " +
                          num(h_max_m) + "] m outside [" + num(kMinObjectHeightM) + ", " +
                          num(kMaxCurveHeightM) + "]");
    if (h_max_m < h_min_m)
        throw DomainError("envelope_curve: empty height range");

    EnvelopeCurve curve;
    curve.engaged_legs = engaged_legs;
    curve.diameter_m = diameter_m;
    curve.yield_strength_Pa = material.yield_strength_Pa;
    for (int i = 0;; ++i) {
        const double h = h_min_m + static_cast<double>(i) * step_m;
        if (h > h_max_m + tol) break;
        curve.points.push_back(
            {h, engaged_legs, max_grasp_force(h, engaged_legs, diameter_m, material, geom)});
    }
    curve.validate();
    return curve;
}

double oblique_contact_factor(ObliqueMode mode, double contact_angle_rad) {
    if (contact_angle_rad < 0.0 || contact_angle_rad >= units::kPi / 2.0)
        throw DomainError("oblique_contact_factor: contact angle " + num(contact_angle_rad) +
                          " rad outside [0, pi/2)");
    switch (mode) {
        case ObliqueMode::flat_half:
            return 0.5;
        case ObliqueMode::normal_decomposition:
            return std::cos(contact_angle_rad);
    }
    throw DomainError("oblique_contact_factor: unknown mode");
}

} // namespace gripperforge::envelope
