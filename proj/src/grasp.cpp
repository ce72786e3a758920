#include "gripperforge/grasp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gripperforge/units.hpp"

namespace gripperforge::grasp {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

constexpr double kMinGraspHeightM = 0.015;
constexpr double kUnitTol = 1e-9;

struct WidthVisitor {
    double operator()(const CylinderShape& c) const { return 2.0 * c.radius_m; }
    double operator()(const BoxShape& b) const {
        return std::min(b.width_m, b.depth_m);
    }
    double operator()(const PolygonShape& p) const {
        return std::max(p.cross_section_m.extent_along({1.0, 0.0}),
                        p.cross_section_m.extent_along({0.0, 1.0}));
    }
};

struct ValidateVisitor {
    void operator()(const CylinderShape& c) const {
        if (!(c.radius_m > 0.0))
            throw DomainError("ObjectModel: cylinder radius must be > 0 m, got " +
                              num(c.radius_m));
    }
    void operator()(const BoxShape& b) const {
        if (!(b.width_m > 0.0) || !(b.depth_m > 0.0))
            throw DomainError("ObjectModel: box sides must be > 0 m, got " +
                              num(b.width_m) + " x " + num(b.depth_m));
    }
    void operator()(const PolygonShape& p) const { p.cross_section_m.validate(); }
};

} // namespace

void ObjectModel::validate() const {
    std::visit(ValidateVisitor{}, shape);
    if (height_m < kMinGraspHeightM - 1e-12)
        throw DomainError("ObjectModel '" + name + "': height " + num(height_m) +
                          " m below graspable minimum " + num(kMinGraspHeightM) + " m");
    if (mass_kg < 0.0)
        throw DomainError("ObjectModel '" + name + "': negative mass");
    if (!(friction_coeff > 0.0))
        throw DomainError("ObjectModel '" + name + "': friction coefficient must be > 0");
}

double ObjectModel::grasp_width_m() const { return std::visit(WidthVisitor{}, shape); }

const char* to_string(GraspMode mode) {
    switch (mode) {
        case GraspMode::four_point: return "four-point";
        case GraspMode::two_point: return "two-point";
        case GraspMode::corner_45: return "corner-45";
    }
    return "unknown";
}

int ContactSet::engaged_count() const {
    int n = 0;
    for (const Contact& c : contacts)
        if (c.engaged) ++n;
    return n;
}

void ContactSet::validate() const {
    const int n = engaged_count();
    if (n < 2 || n > 4)
        throw DomainError("ContactSet: engaged contact count " + std::to_string(n) +
                          " outside [2, 4]");
    if (applied_force_per_leg_N < 0.0)
        throw DomainError("ContactSet: negative per-leg force");
    geom::Vec2 sum{0.0, 0.0};
    for (const Contact& c : contacts) {
        if (std::abs(geom::norm(c.normal) - 1.0) > kUnitTol)
            throw DomainError("ContactSet: contact normal not unit length (|n| = " +
                              num(geom::norm(c.normal)) + ")");
        if (c.engaged) sum = sum + c.normal;
    }
    if (mode == GraspMode::four_point &&
        (std::abs(sum.x) > kUnitTol || std::abs(sum.y) > kUnitTol))
        throw DomainError("ContactSet: four-point normals do not cancel (sum = (" +
                          num(sum.x) + ", " + num(sum.y) + "))");
}

double ContactSet::contact_force_factor(envelope::ObliqueMode oblique) const {
    if (mode != GraspMode::corner_45) return 1.0;
    return envelope::oblique_contact_factor(oblique, units::kPi / 4.0);
}

ContactSet contact_set_for(const ObjectModel& object,
                           const design::GripperConfig& config,
                           double force_command_N) {
    object.validate();
    config.validate();
    if (force_command_N < 0.0)
        throw DomainError("contact_set_for: negative force command");
    if (config.legs != 4)
        throw DomainError("contact_set_for: contact synthesis requires the 4-leg "
                          "arrangement, config has " + std::to_string(config.legs));

    const double width = object.grasp_width_m();
    const design::OpeningFit fit = design::opening_check(width, config);
    if (fit != design::OpeningFit::fits)
        throw InfeasibleError("object '" + object.name + "' with grasp width " +
                              num(units::m_to_mm(width)) + " mm does not fit the opening (" +
                              design::to_string(fit) + ")");

    ContactSet cs;
    if (const auto* cyl = std::get_if<CylinderShape>(&object.shape)) {
        const double r = cyl->radius_m;
        cs.mode = GraspMode::four_point;
        cs.contacts = {{{r, 0.0}, {-1.0, 0.0}, true},
                       {{0.0, r}, {0.0, -1.0}, true},
                       {{-r, 0.0}, {1.0, 0.0}, true},
                       {{0.0, -r}, {0.0, 1.0}, true}};
    } else if (const auto* box = std::get_if<BoxShape>(&object.shape)) {
        const double w = box->width_m;
        const double d = box->depth_m;
        const double long_side = std::max(w, d);
        if (long_side > config.opening_max_m + 1e-9) {
            // Too long to cage: the long axis protrudes between one opposing
            // leg pair, leaving two contacts on the narrow faces.
            cs.mode = GraspMode::two_point;
            const double half = std::min(w, d) / 2.0;
            cs.contacts = {{{half, 0.0}, {-1.0, 0.0}, true},
                           {{-half, 0.0}, {1.0, 0.0}, true}};
        } else {
            // Fits inside the leg square: legs close onto the corners at
            // roughly 45 degrees to the faces.
            cs.mode = GraspMode::corner_45;
            const double hw = w / 2.0;
            const double hd = d / 2.0;
            const geom::Vec2 corners[4] = {
                {hw, hd}, {-hw, hd}, {-hw, -hd}, {hw, -hd}};
            for (const geom::Vec2& p : corners)
                cs.contacts.push_back({p, geom::normalized({-p.x, -p.y}), true});
        }
    } else {
        const auto& poly = std::get<PolygonShape>(object.shape).cross_section_m;
        cs.mode = GraspMode::corner_45;
        const geom::Vec2 c = poly.centroid();
        const geom::Vec2 dirs[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        for (const geom::Vec2& dir : dirs) {
            const geom::Vec2 hit = poly.ray_boundary_intersection(c, dir);
            cs.contacts.push_back({hit - c, {-dir.x, -dir.y}, true});
        }
    }

    cs.applied_force_per_leg_N = force_command_N / cs.engaged_count();
    cs.validate();
    return cs;
}

double closure_margin(const ContactSet& cs, double mu) {
    if (mu < 0.0)
        throw DomainError("closure_margin: negative friction coefficient");

    std::vector<const Contact*> engaged;
    for (const Contact& c : cs.contacts)
        if (c.engaged) engaged.push_back(&c);
    if (engaged.empty()) return -std::numeric_limits<double>::infinity();

    geom::Vec2 centroid{0.0, 0.0};
    for (const Contact* c : engaged) centroid = centroid + c->point_m;
    centroid = centroid * (1.0 / static_cast<double>(engaged.size()));

    double rho = 0.0;
    for (const Contact* c : engaged)
        rho = std::max(rho, geom::norm(c->point_m - centroid));
    if (rho <= 0.0) rho = 1.0; // coincident points: torques vanish anyway

    // Planar friction cones are exactly two-edged; unit edge forces with the
    // torque scaled by the largest moment arm keep the wrench set
    // commensurate across force/torque axes and independent of force
    // magnitude.
    const double scale = 1.0 / std::sqrt(1.0 + mu * mu);
    std::vector<geom::Wrench> wrenches;
    wrenches.reserve(2 * engaged.size());
    for (const Contact* c : engaged) {
        const geom::Vec2 n = geom::normalized(c->normal);
        const geom::Vec2 t{-n.y, n.x};
        const geom::Vec2 arm = c->point_m - centroid;
        for (const double s : {1.0, -1.0}) {
            const geom::Vec2 f = (n + t * (s * mu)) * scale;
            wrenches.push_back({f.x, f.y, geom::cross(arm, f) / rho});
        }
    }
    return geom::origin_interior_margin(wrenches);
}

bool force_closure(const ContactSet& cs, double mu) {
    return closure_margin(cs, mu) > kClosureTol;
}

double lift_capacity(const ContactSet& cs, double mu, double accel_mps2,
                     envelope::ObliqueMode oblique) {
    if (mu < 0.0)
        throw DomainError("lift_capacity: negative friction coefficient");
    if (accel_mps2 < 0.0)
        throw DomainError("lift_capacity: negative acceleration");
    const double factor = cs.contact_force_factor(oblique);
    const double total =
        cs.applied_force_per_leg_N * factor * static_cast<double>(cs.engaged_count());
    return mu * total / (kGravityMps2 + accel_mps2);
}

CapacityReport assess_grasp(const ObjectModel& object,
                            const design::GripperConfig& config,
                            double force_command_N, double accel_mps2,
                            envelope::ObliqueMode oblique) {
    const ContactSet cs = contact_set_for(object, config, force_command_N);

    CapacityReport report;
    report.object_name = object.name;
    report.mode = cs.mode;
    report.normal_force_total_N = cs.applied_force_per_leg_N *
                                  cs.contact_force_factor(oblique) *
                                  static_cast<double>(cs.engaged_count());
    report.force_closure = force_closure(cs, object.friction_coeff);
    report.lift_capacity_kg =
        lift_capacity(cs, object.friction_coeff, accel_mps2, oblique);
    report.manipulation_ok = report.force_closure &&
                             report.lift_capacity_kg + 1e-12 >= object.mass_kg;

    const double f_max = envelope::max_grasp_force(
        object.height_m, cs.engaged_count(), config.leg.diameter_m,
        config.material, config.leg.arm_geometry());
    report.overload = force_command_N > f_max + 1e-9;

    report.warnings.push_back("friction coefficient mu = " +
                              num(object.friction_coeff) +
                              " is an input assumption rather than a measured value");
    if (object.height_m > envelope::kMaxCurveHeightM)
        report.warnings.push_back(
            "object height " + num(units::m_to_mm(object.height_m)) +
            " mm exceeds the " + num(units::m_to_mm(envelope::kMaxCurveHeightM)) +
            " mm envelope range: force limit uses the plateau arm length");
    return report;
}

} // namespace gripperforge::grasp
