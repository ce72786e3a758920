#pragma once

#include <vector>

#include "gripperforge/envelope.hpp"
#include "gripperforge/mechanics.hpp"
#include "gripperforge/units.hpp"

// Discrete leg sizing against stock diameters, footprint metrics, the inward
// inclination preset, and opening-range checks for the assembled gripper.

namespace gripperforge::design {

// Geometry of one leg. footprint_area is the clutter-penetration cross
// section of the leg tip including the pad and hair base; it exceeds the bare
// rod section and is therefore an input, not derived from the diameter.
struct LegSpec {
    double length_m = 0.150;
    double pad_length_m = 0.100;
    double tip_clearance_m = 0.010;
    double diameter_m = 0.005;
    double footprint_area_m2 = 35e-6;
    double inclination_rad = units::deg_to_rad(1.12);

    void validate() const;

    // Arm-length model derived from this leg: shortest arm = length minus pad
    // coverage, full reach = length plus tarsus tip clearance.
    envelope::ArmGeometry arm_geometry() const;
};

struct GripperConfig {
    int legs = 4;
    LegSpec leg;
    mechanics::Material material{"stainless steel", 200e9, 200e6};
    double opening_min_m = 0.005;
    double opening_max_m = 0.120;
    double opening_accuracy_m = 0.001;
    double force_command_max_N = 15.0;

    void validate() const;
};

struct DesignRequest {
    double total_force_N = 50.0;
    int engaged_legs = 3;
    double design_height_m = 0.040;
    // Common ground-shaft stock sizes, strictly increasing.
    std::vector<double> stock_diameters_m = {0.003, 0.004, 0.005, 0.006, 0.008, 0.010, 0.012};
    double min_margin = 0.0;

    void validate() const;
};

struct Footprint {
    double per_leg_m2 = 0.0; // a_fp
    double total_m2 = 0.0;   // A_fp = legs * a_fp
};

enum class FootprintMode {
    pad_rated, // the configured per-leg area (pad + hair base)
    bare_rod,  // pi*D^2/4 of the bare leg rod
};

enum class OpeningFit {
    fits,
    too_wide,
    below_min,
};

// Smallest stock diameter whose fixed-end stress under total_force /
// engaged_legs at the design-height arm keeps safety_margin >= min_margin
// (absolute tolerance 1e-12). Throws InfeasibleError carrying the best
// margin achieved when no stock size qualifies.
double min_leg_diameter(const DesignRequest& req, const mechanics::Material& material);

Footprint footprint(const GripperConfig& config, FootprintMode mode = FootprintMode::pad_rated);

// Free-end slope under the given load; presetting the legs to lean inward by
// this angle makes them finish parallel under load and push objects inward.
double recommended_inclination(const mechanics::BeamLoadCase& c, const mechanics::Material& m);

// Pre-grasp opening is object width plus the positioning accuracy on both
// sides; it must not exceed the maximum opening. Objects narrower than the
// minimum opening cannot be contacted at all.
OpeningFit opening_check(double object_width_m, const GripperConfig& config);

const char* to_string(OpeningFit fit);

} // namespace gripperforge::design
