#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gripperforge/design.hpp"
#include "gripperforge/errors.hpp"
#include "gripperforge/grasp.hpp"
#include "gripperforge/units.hpp"

// Pick-rotate-release trial plans as plain data, trapezoidal motion timing,
// and clutter-gap penetration feasibility.

namespace gripperforge::trial {

// Maps an angle into (-pi, pi].
double normalize_angle(double angle_rad);

struct Pose6D {
    double x_m = 0.0;
    double y_m = 0.0;
    double z_m = 0.0;
    double roll_rad = 0.0;
    double pitch_rad = 0.0;
    double yaw_rad = 0.0;

    Pose6D normalized() const;
};

inline constexpr Pose6D kHomePose{0.37, 0.0, 0.5, units::kPi, 0.0, 0.0};
inline constexpr Pose6D kRotPlusPose{0.37, 0.0, 0.5, units::kPi,
                                     units::deg_to_rad(70.0),
                                     units::deg_to_rad(90.0)};
inline constexpr Pose6D kRotMinusPose{0.37, 0.0, 0.5, units::kPi,
                                      units::deg_to_rad(-70.0),
                                      units::deg_to_rad(90.0)};

struct MoveTo {
    Pose6D target;
};

struct CloseToForce {
    double force_N = 0.0;
};

struct OpenToGap {
    double gap_m = 0.0;
};

struct TrialStep {
    int index = 0; // 1-based ordinal within the plan
    std::variant<MoveTo, CloseToForce, OpenToGap> action;
};

struct MotionLimits {
    double v_max_mps = 0.4;
    double a_max_mps2 = 0.7;
    // Rotational limits are configurable defaults, not published values.
    double w_max_radps = units::kPi / 2.0;
    double alpha_max_radps2 = units::kPi;

    void validate() const; // all limits must be > 0
};

struct ClutterGap {
    double width_m = 0.0;
    double depth_m = 0.0;
};

struct ClutterScene {
    std::vector<ClutterGap> gaps;
    double entry_margin_m = 0.002; // tarsus-tip deformation allowance

    // Rejects negative dimensions and margins. Zero-width gaps are legal
    // input; they simply cannot host a leg.
    void validate() const;
};

struct ClutterReport {
    bool feasible = false;
    bool width_count_ok = false; // enough eligible gap capacity for all legs
    bool area_ok = false;        // assigned gap areas cover the footprint
    double required_width_m = 0.0;
    double required_area_m2 = 0.0;
    double assigned_area_m2 = 0.0;
    std::vector<int> legs_per_gap; // aligned with scene.gaps
    std::vector<std::string> detail;
};

// Grasp-approach height above the table as a function of object height:
// linear with unit slope from the lower endpoint, clamped to [0.27, 0.35] m.
double grasp_pose_z(double object_height_m);

// Emits the fixed 9-step sequence: descend, close, lift home, rotate +70,
// rotate -70, home, descend, open, home. Steps 2 and 8 are the gripper
// actions. Throws before emitting anything if the object fails the opening
// check.
std::vector<TrialStep> build_trial_plan(const grasp::ObjectModel& object,
                                        const design::GripperConfig& config,
                                        double force_command_N);

// Time for one point-to-point segment: trapezoidal (or triangular, when the
// distance is too short to reach cruise speed) profile on the translational
// distance and on the largest angle change; a combined move takes the longer
// of the two.
double segment_duration(const Pose6D& from, const Pose6D& to,
                        const MotionLimits& limits = {});

// Width check per leg (gap width >= leg diameter - entry margin, so each leg
// needs that much clear width; a wide gap hosts floor(width/required) legs)
// plus an area check: the distinct gaps that receive legs must together
// cover the gripper footprint A_fp.
ClutterReport clutter_feasibility(const ClutterScene& scene,
                                  const design::GripperConfig& config);

// Serializes a plan to the documented JSON schema with fixed key order and
// 9-decimal fixed-point numbers, so identical plans are byte-identical.
std::string plan_to_json(const std::vector<TrialStep>& steps,
                         const std::string& object_name);

} // namespace gripperforge::trial
