#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gripperforge/design.hpp"
#include "gripperforge/envelope.hpp"
#include "gripperforge/errors.hpp"
#include "gripperforge/geometry.hpp"

// Contact synthesis and quasi-static grasp feasibility: planar force closure
// under Coulomb friction plus a scalar vertical lift-capacity check.

namespace gripperforge::grasp {

inline constexpr double kGravityMps2 = 9.81;
// Hull clearance below this counts as no closure; marginal closure is not robust.
inline constexpr double kClosureTol = 1e-9;

struct CylinderShape {
    double radius_m = 0.0;
};

struct BoxShape {
    double width_m = 0.0;
    double depth_m = 0.0;
};

struct PolygonShape {
    geom::ConvexPolygon cross_section_m; // CCW convex vertex loop, meters
};

using Shape = std::variant<CylinderShape, BoxShape, PolygonShape>;

struct ObjectModel {
    std::string name;
    Shape shape = CylinderShape{};
    double height_m = 0.0;
    double mass_kg = 0.0;
    double friction_coeff = 0.8;

    // Throws DomainError on invalid dimensions, mass < 0, friction <= 0,
    // height below the graspable minimum, or a non-convex polygon.
    void validate() const;
    // Cross-section span the opening has to accommodate: cylinder diameter,
    // smallest box side, or the larger axis extent of a polygon.
    double grasp_width_m() const;
};

enum class GraspMode { four_point, two_point, corner_45 };

const char* to_string(GraspMode mode);

struct Contact {
    geom::Vec2 point_m;  // position in the gripper frame (grasp centroid ~ origin)
    geom::Vec2 normal;   // inward unit normal
    bool engaged = true;
};

struct ContactSet {
    std::vector<Contact> contacts;
    double applied_force_per_leg_N = 0.0;
    GraspMode mode = GraspMode::four_point;

    int engaged_count() const;
    // Throws DomainError if engaged count is outside [2,4], a normal is not
    // unit length, force is negative, or a four-point set is not symmetric
    // (engaged normals must cancel).
    void validate() const;
    // Per-contact effective normal-force fraction: 1 except for corner
    // grasps, where the oblique 45-degree contact is derated.
    double contact_force_factor(
        envelope::ObliqueMode mode = envelope::ObliqueMode::flat_half) const;
};

struct CapacityReport {
    std::string object_name;
    GraspMode mode = GraspMode::four_point;
    double normal_force_total_N = 0.0;
    double lift_capacity_kg = 0.0;
    bool force_closure = false;
    bool manipulation_ok = false;
    bool overload = false;
    std::vector<std::string> warnings;
};

// Synthesize leg contacts for the 4-leg square arrangement. Cylinders get
// four contacts at 90-degree spacing; boxes too long to cage fully get two
// contacts on the narrow faces; boxes that fit inside the leg square and
// convex polygons get four oblique corner contacts. Throws InfeasibleError
// when the object fails the opening check.
ContactSet contact_set_for(const ObjectModel& object,
                           const design::GripperConfig& config,
                           double force_command_N);

// Clearance of the wrench-space origin inside the convex hull of the
// friction-cone edge wrenches (unit edge forces, torque about the engaged
// contact centroid normalized by the largest moment arm). Positive iff the
// grasp resists every planar disturbance.
double closure_margin(const ContactSet& cs, double mu);

// True iff closure_margin exceeds kClosureTol. Degenerate geometry (too few
// contacts, collinear wrenches) reports false rather than throwing.
bool force_closure(const ContactSet& cs, double mu);

// Friction-supported vertical load: mu * sum of effective engaged normal
// forces / (g + accel).
double lift_capacity(const ContactSet& cs, double mu, double accel_mps2,
                     envelope::ObliqueMode oblique =
                         envelope::ObliqueMode::flat_half);

// End-to-end feasibility: contact synthesis, force closure, lift capacity vs
// mass, and a force-command overload check against the height-dependent
// envelope limit.
CapacityReport assess_grasp(const ObjectModel& object,
                            const design::GripperConfig& config,
                            double force_command_N, double accel_mps2,
                            envelope::ObliqueMode oblique =
                                envelope::ObliqueMode::flat_half);

} // namespace gripperforge::grasp
