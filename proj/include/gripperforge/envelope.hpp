#pragma once

#include <vector>

#include "gripperforge/mechanics.hpp"

// Object-height-dependent maximum grasping force: the taller the object, the
// shorter the effective bending arm of the leg, the more force the leg takes
// before yielding.

namespace gripperforge::envelope {

// Lowest analyzed object height; the resting surface sits one tarsus tip
// below the pad, so shorter objects never reach the friction pad.
inline constexpr double kMinObjectHeightM = 0.015;

// Upper end of the published force/height curves; also the height above
// which the pad no longer covers the full object and reports carry a warning.
inline constexpr double kMaxCurveHeightM = 0.120;

// Geometry behind the effective-arm-length model. min_arm is the leg length
// minus the pad coverage (the shortest possible bending arm); reach is the
// leg length plus the tarsus-tip clearance to the resting surface.
struct ArmGeometry {
    double min_arm_m = 0.050;
    double reach_m = 0.160;
};

struct EnvelopePoint {
    double object_height_m = 0.0;
    int engaged_legs = 0;
    double f_max_N = 0.0;
};

struct EnvelopeCurve {
    std::vector<EnvelopePoint> points;
    int engaged_legs = 0;
    double diameter_m = 0.0;
    double yield_strength_Pa = 0.0;

    // Heights strictly increasing, force nondecreasing along the curve.
    void validate() const;
};

enum class ObliqueMode {
    flat_half,         // flat 0.5 regardless of angle
    normal_decomposition, // cos(contact_angle)
};

// max(min_arm, reach - H). Throws DomainError for nonpositive height.
double effective_arm_length(double object_height_m, const ArmGeometry& geom = {});

// pi * N * D^3 * sigma_yield / (32 * L_eff(H)).
double max_grasp_force(double object_height_m, int engaged_legs, double diameter_m,
                       const mechanics::Material& material, const ArmGeometry& geom = {});

// Samples [h_min, h_max] at the given step (default 1 mm). The range must
// stay within [kMinObjectHeightM, kMaxCurveHeightM].
EnvelopeCurve envelope_curve(double h_min_m, double h_max_m, double step_m,
                             int engaged_legs, double diameter_m,
                             const mechanics::Material& material,
                             const ArmGeometry& geom = {});

// Fraction of the applied force that squeezes the object when the contact is
// oblique. Angle is measured from the surface normal, legal range [0, 90).
double oblique_contact_factor(ObliqueMode mode, double contact_angle_rad);

} // namespace gripperforge::envelope
