#include "gripperforge/trial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace gripperforge::trial {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

// One-axis point-to-point time under symmetric accel/cruise limits.
double profile_time(double distance, double v_max, double a_max) {
    if (distance <= 0.0) return 0.0;
    if (distance >= v_max * v_max / a_max)
        return distance / v_max + v_max / a_max; // trapezoidal with cruise
    return 2.0 * std::sqrt(distance / a_max);    // triangular, never reaches v_max
}

constexpr double kZLow = 0.27;
constexpr double kZHigh = 0.35;
constexpr double kHeightTol = 1e-12;
constexpr double kAreaTol = 1e-9; // m^2 (and m for width comparisons)

} // namespace

double normalize_angle(double angle_rad) {
    double r = std::fmod(angle_rad + units::kPi, 2.0 * units::kPi);
    if (r <= 0.0) r += 2.0 * units::kPi;
    return r - units::kPi;
}

Pose6D Pose6D::normalized() const {
    Pose6D p = *this;
    p.roll_rad = normalize_angle(p.roll_rad);
    p.pitch_rad = normalize_angle(p.pitch_rad);
    p.yaw_rad = normalize_angle(p.yaw_rad);
    return p;
}

void MotionLimits::validate() const {
    if (!(v_max_mps > 0.0) || !(a_max_mps2 > 0.0) || !(w_max_radps > 0.0) ||
        !(alpha_max_radps2 > 0.0))
        throw DomainError("MotionLimits: all limits must be > 0");
}

void ClutterScene::validate() const {
    if (entry_margin_m < 0.0)
        throw DomainError("ClutterScene: negative entry margin");
    for (std::size_t i = 0; i < gaps.size(); ++i)
        if (gaps[i].width_m < 0.0 || gaps[i].depth_m < 0.0)
            throw DomainError("ClutterScene: gap " + std::to_string(i) +
                              " has a negative dimension");
}

double grasp_pose_z(double object_height_m) {
    if (object_height_m < 0.015 - kHeightTol || object_height_m > 0.120 + kHeightTol)
        throw DomainError("grasp_pose_z: object height " + num(object_height_m) +
                          " m outside [0.015, 0.120]");
    return std::clamp(kZLow + (object_height_m - 0.015), kZLow, kZHigh);
}

std::vector<TrialStep> build_trial_plan(const grasp::ObjectModel& object,
                                        const design::GripperConfig& config,
                                        double force_command_N) {
    object.validate();
    config.validate();
    if (force_command_N < 0.0)
        throw DomainError("build_trial_plan: negative force command");

    const double width = object.grasp_width_m();
    const design::OpeningFit fit = design::opening_check(width, config);
    if (fit != design::OpeningFit::fits)
        throw InfeasibleError("object '" + object.name + "' with grasp width " +
                              num(units::m_to_mm(width)) +
                              " mm does not fit the opening (" +
                              design::to_string(fit) + ")");

    // Objects taller than the envelope range are approached at the top of
    // the z band.
    const double plan_height = std::clamp(object.height_m, 0.015, 0.120);
    Pose6D grasp_pose = kHomePose;
    grasp_pose.z_m = grasp_pose_z(plan_height);

    const double release_gap = width + 2.0 * config.opening_accuracy_m;

    std::vector<TrialStep> steps;
    steps.reserve(9);
    auto move = [&steps](const Pose6D& p) {
        steps.push_back({static_cast<int>(steps.size()) + 1, MoveTo{p.normalized()}});
    };
    move(grasp_pose);
    steps.push_back({2, CloseToForce{force_command_N}});
    move(kHomePose);
    move(kRotPlusPose);
    move(kRotMinusPose);
    move(kHomePose);
    move(grasp_pose);
    steps.push_back({8, OpenToGap{release_gap}});
    move(kHomePose);
    return steps;
}

double segment_duration(const Pose6D& from, const Pose6D& to,
                        const MotionLimits& limits) {
    limits.validate();
    const double dx = to.x_m - from.x_m;
    const double dy = to.y_m - from.y_m;
    const double dz = to.z_m - from.z_m;
    const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);

    const double dang = std::max({std::abs(normalize_angle(to.roll_rad - from.roll_rad)),
                                  std::abs(normalize_angle(to.pitch_rad - from.pitch_rad)),
                                  std::abs(normalize_angle(to.yaw_rad - from.yaw_rad))});

    return std::max(profile_time(dist, limits.v_max_mps, limits.a_max_mps2),
                    profile_time(dang, limits.w_max_radps, limits.alpha_max_radps2));
}

ClutterReport clutter_feasibility(const ClutterScene& scene,
                                  const design::GripperConfig& config) {
    scene.validate();
    config.validate();

    ClutterReport report;
    report.required_width_m =
        std::max(config.leg.diameter_m - scene.entry_margin_m, 0.0);
    report.required_area_m2 = design::footprint(config).total_m2;
    report.legs_per_gap.assign(scene.gaps.size(), 0);

    const int legs = config.legs;
    const double req = report.required_width_m;

    // A gap hosts floor(width/required) legs; with no width requirement any
    // gap hosts them all.
    std::vector<int> capacity(scene.gaps.size(), 0);
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < scene.gaps.size(); ++i) {
        if (scene.gaps[i].width_m >= req - kAreaTol) {
            capacity[i] = req <= kAreaTol
                              ? legs
                              : static_cast<int>((scene.gaps[i].width_m + kAreaTol) / req);
            capacity[i] = std::min(capacity[i], legs);
            if (capacity[i] > 0) eligible.push_back(i);
        }
    }

    // Spread legs across the largest eligible gaps first: this maximizes the
    // distinct assigned area, so the verdict is the most favorable one.
    std::stable_sort(eligible.begin(), eligible.end(),
                     [&scene](std::size_t a, std::size_t b) {
                         const double aa = scene.gaps[a].width_m * scene.gaps[a].depth_m;
                         const double ab = scene.gaps[b].width_m * scene.gaps[b].depth_m;
                         return aa > ab;
                     });

    int remaining = legs;
    for (std::size_t idx : eligible) {
        if (remaining == 0) break;
        report.legs_per_gap[idx] = 1;
        --remaining;
    }
    for (std::size_t idx : eligible) {
        while (remaining > 0 && report.legs_per_gap[idx] < capacity[idx]) {
            ++report.legs_per_gap[idx];
            --remaining;
        }
    }
    report.width_count_ok = remaining == 0;

    for (std::size_t i = 0; i < scene.gaps.size(); ++i)
        if (report.legs_per_gap[i] > 0)
            report.assigned_area_m2 += scene.gaps[i].width_m * scene.gaps[i].depth_m;
    report.area_ok = report.assigned_area_m2 >= report.required_area_m2 - kAreaTol;

    report.feasible = report.width_count_ok && report.area_ok;

    report.detail.push_back("required clear width per leg: " +
                            num(units::m_to_mm(req)) + " mm");
    report.detail.push_back("eligible gaps: " + std::to_string(eligible.size()) +
                            " of " + std::to_string(scene.gaps.size()));
    if (!report.width_count_ok) {
        int total_capacity = 0;
        for (std::size_t idx : eligible) total_capacity += capacity[idx];
        report.detail.push_back("binding: leg capacity " + std::to_string(total_capacity) +
                                " < " + std::to_string(legs) + " legs");
    }
    report.detail.push_back("assigned gap area " +
                            num(units::m2_to_mm2(report.assigned_area_m2)) + " mm^2 vs footprint " +
                            num(units::m2_to_mm2(report.required_area_m2)) + " mm^2" +
                            (report.area_ok ? "" : " (binding)"));
    return report;
}

std::string plan_to_json(const std::vector<TrialStep>& steps,
                         const std::string& object_name) {
    std::string out;
    out += "{\n";
    out += "  \"schema\": \"gripperforge.trial_plan.v1\",\n";
    out += "  \"object\": \"" + object_name + "\",\n";
    out += "  \"steps\": [\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const TrialStep& s = steps[i];
        out += "    {\"index\": " + std::to_string(s.index) + ", ";
        if (const auto* m = std::get_if<MoveTo>(&s.action)) {
            const Pose6D& p = m->target;
            out += "\"kind\": \"move_to\", \"pose_m_rad\": [" + fixed9(p.x_m) + ", " +
                   fixed9(p.y_m) + ", " + fixed9(p.z_m) + ", " + fixed9(p.roll_rad) +
                   ", " + fixed9(p.pitch_rad) + ", " + fixed9(p.yaw_rad) + "]}";
        } else if (const auto* c = std::get_if<CloseToForce>(&s.action)) {
            out += "\"kind\": \"close_to_force\", \"force_N\": " + fixed9(c->force_N) + "}";
        } else {
            out += "\"kind\": \"open_to_gap\", \"gap_m\": " +
                   fixed9(std::get<OpenToGap>(s.action).gap_m) + "}";
        }
        out += i + 1 < steps.size() ? ",\n" : "\n";
    }
    out += "  ]\n";
    out += "}\n";
    return out;
}

} // namespace gripperforge::trial
