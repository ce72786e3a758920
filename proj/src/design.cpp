#include "gripperforge/design.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace gripperforge::design {

namespace {

constexpr double kMarginTol = 1e-12;
constexpr double kOpeningTol = 1e-9;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace

void LegSpec::validate() const {
    if (!(length_m > 0.0) || !(pad_length_m > 0.0) || !(tip_clearance_m > 0.0) ||
        !(diameter_m > 0.0))
        throw DomainError("LegSpec: all lengths must be > 0");
    if (pad_length_m > length_m)
        throw DomainError("LegSpec: pad_length " + num(pad_length_m) +
                          " m exceeds leg length " + num(length_m));
    if (!(footprint_area_m2 > 0.0))
        throw DomainError("LegSpec: footprint_area must be > 0, got " + num(footprint_area_m2));
}

envelope::ArmGeometry LegSpec::arm_geometry() const {
    return {length_m - pad_length_m, length_m + tip_clearance_m};
}

void GripperConfig::validate() const {
    leg.validate();
    if (legs < 2)
        throw DomainError("GripperConfig: legs must be >= 2, got " + std::to_string(legs));
    if (!(opening_min_m < opening_max_m))
        throw DomainError("GripperConfig: opening_min " + num(opening_min_m) +
                          " m must be below opening_max " + num(opening_max_m));
    if (!(opening_accuracy_m >= 0.0))
        throw DomainError("GripperConfig: opening_accuracy must be >= 0");
    if (!(force_command_max_N >= 0.0))
        throw DomainError("GripperConfig: force_command_max must be >= 0");
}

void DesignRequest::validate() const {
    if (!(total_force_N >= 0.0))
        throw DomainError("DesignRequest: total_force must be >= 0, got " + num(total_force_N));
    if (engaged_legs < 1)
        throw DomainError("DesignRequest: engaged_legs must be >= 1, got " +
                          std::to_string(engaged_legs));
    if (!(design_height_m > 0.0))
        throw DomainError("DesignRequest: design_height must be > 0, got " +
                          num(design_height_m));
    if (stock_diameters_m.empty())
        throw DomainError("DesignRequest: stock_diameters must not be empty");
    for (std::size_t i = 0; i < stock_diameters_m.size(); ++i) {
        if (!(stock_diameters_m[i] > 0.0))
            throw DomainError("DesignRequest: stock diameter must be > 0, got " +
                              num(stock_diameters_m[i]));
        if (i > 0 && !(stock_diameters_m[i] > stock_diameters_m[i - 1]))
            throw DomainError("DesignRequest: stock_diameters must be strictly increasing");
    }
    if (min_margin < 0.0 || min_margin >= 1.0)
        throw DomainError("DesignRequest: min_margin must be in [0, 1), got " + num(min_margin));
}

double min_leg_diameter(const DesignRequest& req, const mechanics::Material& material) {
    req.validate();
    const double per_leg_N = req.total_force_N / static_cast<double>(req.engaged_legs);
    const double arm_m = envelope::effective_arm_length(req.design_height_m);

    double best_margin = -std::numeric_limits<double>::infinity();
    for (double d : req.stock_diameters_m) {
        const mechanics::BeamLoadCase c{per_leg_N, arm_m, d};
        const double margin = mechanics::safety_margin(mechanics::max_bending_stress(c), material);
        if (margin >= req.min_margin - kMarginTol) return d;
        best_margin = std::max(best_margin, margin);
    }
    throw InfeasibleError("min_leg_diameter: no stock diameter reaches margin " +
                              num(req.min_margin) + "; best achieved " + num(best_margin) +
                              " at " + num(req.stock_diameters_m.back() * 1e3) + " mm",
                          best_margin);
}

Footprint footprint(const GripperConfig& config, FootprintMode mode) {
    config.validate();
    Footprint fp;
    fp.per_leg_m2 = mode == FootprintMode::pad_rated
                        ? config.leg.footprint_area_m2
                        : units::kPi * config.leg.diameter_m * config.leg.diameter_m / 4.0;
    fp.total_m2 = static_cast<double>(config.legs) * fp.per_leg_m2;
    return fp;
}

double recommended_inclination(const mechanics::BeamLoadCase& c, const mechanics::Material& m) {
    return mechanics::max_slope(c, m);
}

OpeningFit opening_check(double object_width_m, const GripperConfig& config) {
    if (!(object_width_m > 0.0))
        throw DomainError("opening_check: object_width must be > 0, got " + num(object_width_m));
    const double pre_grasp_m = object_width_m + 2.0 * config.opening_accuracy_m;
    if (pre_grasp_m > config.opening_max_m + kOpeningTol) return OpeningFit::too_wide;
    if (object_width_m < config.opening_min_m - kOpeningTol) return OpeningFit::below_min;
    return OpeningFit::fits;
}

const char* to_string(OpeningFit fit) {
    switch (fit) {
        case OpeningFit::fits: return "fits";
        case OpeningFit::too_wide: return "too-wide";
        case OpeningFit::below_min: return "below-min";
    }
    return "unknown";
}

} // namespace gripperforge::design
