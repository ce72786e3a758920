#include "gripperforge/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gripperforge/design.hpp"
#include "gripperforge/envelope.hpp"
#include "gripperforge/errors.hpp"
#include "gripperforge/grasp.hpp"
#include "gripperforge/io.hpp"
#include "gripperforge/mechanics.hpp"
#include "gripperforge/trial.hpp"
#include "gripperforge/units.hpp"

namespace gripperforge::cli {

namespace {

// Fixed 6-significant-digit formatting keeps every report byte-reproducible.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

const char* yesno(bool v) { return v ? "yes" : "no"; }
const char* truefalse(bool v) { return v ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// A report as ordered key/value pairs, rendered as text, a JSON object, or a
// one-row CSV table.
struct Report {
    std::vector<std::pair<std::string, std::string>> fields; // values pre-rendered for JSON
    void add(const std::string& key, double v) { fields.push_back({key, fmt(v)}); }
    void add(const std::string& key, bool v) { fields.push_back({key, truefalse(v)}); }
    void add_text(const std::string& key, const std::string& v) {
        fields.push_back({key, "\"" + json_escape(v) + "\""});
    }
};

std::string plain(const std::string& json_value) {
    if (json_value.size() >= 2 && json_value.front() == '"' && json_value.back() == '"')
        return json_value.substr(1, json_value.size() - 2);
    return json_value;
}

void print_report(std::ostream& out, const Report& r, const std::string& format) {
    if (format == "json") {
        out << "{\n";
        for (std::size_t i = 0; i < r.fields.size(); ++i)
            out << "  \"" << r.fields[i].first << "\": " << r.fields[i].second
                << (i + 1 < r.fields.size() ? ",\n" : "\n");
        out << "}\n";
    } else if (format == "csv") {
        for (std::size_t i = 0; i < r.fields.size(); ++i)
            out << r.fields[i].first << (i + 1 < r.fields.size() ? "," : "\n");
        for (std::size_t i = 0; i < r.fields.size(); ++i)
            out << plain(r.fields[i].second) << (i + 1 < r.fields.size() ? "," : "\n");
    } else {
        for (const auto& [key, value] : r.fields)
            out << key << ": " << plain(value) << "\n";
    }
}

struct AssessRow {
    grasp::CapacityReport report;
};

void print_assess(std::ostream& out, const std::vector<AssessRow>& rows,
                  const std::string& format) {
    if (format == "json") {
        out << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i].report;
            out << "  {\"name\": \"" << json_escape(r.object_name) << "\", \"mode\": \""
                << grasp::to_string(r.mode) << "\", \"normal_force_N\": "
                << fmt(r.normal_force_total_N) << ", \"lift_capacity_kg\": "
                << fmt(r.lift_capacity_kg) << ", \"force_closure\": "
                << truefalse(r.force_closure) << ", \"manipulation_ok\": "
                << truefalse(r.manipulation_ok) << ", \"overload\": "
                << truefalse(r.overload) << ", \"warnings\": [";
            for (std::size_t w = 0; w < r.warnings.size(); ++w)
                out << (w ? ", " : "") << "\"" << json_escape(r.warnings[w]) << "\"";
            out << "]}" << (i + 1 < rows.size() ? ",\n" : "\n");
        }
        out << "]\n";
    } else if (format == "csv") {
        out << "name,mode,normal_force_N,lift_capacity_kg,force_closure,"
               "manipulation_ok,overload,warnings\n";
        for (const auto& row : rows) {
            const auto& r = row.report;
            out << r.object_name << "," << grasp::to_string(r.mode) << ","
                << fmt(r.normal_force_total_N) << "," << fmt(r.lift_capacity_kg) << ","
                << truefalse(r.force_closure) << "," << truefalse(r.manipulation_ok)
                << "," << truefalse(r.overload) << "," << join(r.warnings, "; ")
                << "\n";
        }
    } else {
        int ok_count = 0;
        std::vector<std::string> notes;
        for (const auto& row : rows) {
            const auto& r = row.report;
            if (r.manipulation_ok) ++ok_count;
            out << r.object_name << ": mode=" << grasp::to_string(r.mode)
                << " normal_force_N=" << fmt(r.normal_force_total_N)
                << " lift_capacity_kg=" << fmt(r.lift_capacity_kg)
                << " closure=" << yesno(r.force_closure)
                << " ok=" << yesno(r.manipulation_ok)
                << " overload=" << yesno(r.overload) << "\n";
            for (const std::string& w : r.warnings)
                if (std::find(notes.begin(), notes.end(), w) == notes.end())
                    notes.push_back(w);
        }
        out << "summary: " << ok_count << "/" << rows.size() << " ok\n";
        for (const std::string& w : notes) out << "note: " << w << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Design and analysis toolkit for a four-legged tarsus-inspired gripper"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::string format = "text";
    app.add_option("--config", config_path, "gripper config JSON (defaults built in)")
        ->envname("GRIPPERFORGE_CONFIG");
    app.add_option("--out", out_dir, "output directory for generated files")
        ->envname("GRIPPERFORGE_OUT");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("GRIPPERFORGE_FORMAT");

    // analyze-beam
    auto* cmd_beam = app.add_subcommand("analyze-beam",
                                        "Cantilever stress/deflection for one leg");
    double beam_force_n = 16.67, beam_length_mm = 120.0, beam_diameter_mm = 5.0;
    cmd_beam->add_option("--force-n", beam_force_n, "tip load in N");
    cmd_beam->add_option("--length-mm", beam_length_mm, "bending arm length in mm");
    cmd_beam->add_option("--diameter-mm", beam_diameter_mm, "leg diameter in mm");

    // design-leg
    auto* cmd_design = app.add_subcommand("design-leg",
                                          "Smallest stock diameter meeting a margin");
    double design_force_n = 50.0, design_height_mm = 40.0, design_min_margin = 0.0;
    int design_legs = 3;
    std::vector<double> stock_mm;
    cmd_design->add_option("--force-n", design_force_n, "total grasp force in N");
    cmd_design->add_option("--legs", design_legs, "engaged leg count sharing the load");
    cmd_design->add_option("--height-mm", design_height_mm, "design object height in mm");
    cmd_design->add_option("--min-margin", design_min_margin, "required safety margin");
    cmd_design->add_option("--stock-mm", stock_mm, "stock diameters in mm")->delimiter(',');

    // envelope
    auto* cmd_env = app.add_subcommand("envelope",
                                       "Max grasp force vs object height curves (CSV)");
    std::vector<int> env_legs = {1, 2, 3, 4};
    double env_min_mm = 15.0, env_max_mm = 120.0, env_step_mm = 1.0, env_diameter_mm = 0.0;
    cmd_env->add_option("--legs", env_legs, "engaged leg counts, one curve each")
        ->delimiter(',');
    cmd_env->add_option("--min-mm", env_min_mm, "lowest object height in mm");
    cmd_env->add_option("--max-mm", env_max_mm, "highest object height in mm");
    cmd_env->add_option("--step-mm", env_step_mm, "height step in mm");
    cmd_env->add_option("--diameter-mm", env_diameter_mm,
                        "leg diameter in mm (default: config)");

    // assess
    auto* cmd_assess = app.add_subcommand("assess",
                                          "Grasp feasibility for an object catalog");
    std::string catalog_path;
    double assess_force_n = 0.0, assess_accel = 0.7;
    cmd_assess->add_option("--catalog", catalog_path, "object catalog JSON")->required();
    cmd_assess->add_option("--force-n", assess_force_n,
                           "force command in N (default: config limit)");
    cmd_assess->add_option("--accel", assess_accel, "worst-case acceleration in m/s^2");

    // plan-trial
    auto* cmd_plan = app.add_subcommand("plan-trial",
                                        "Emit the 9-step pick/rotate/release plan");
    std::string plan_catalog, plan_object, plan_name = "test cylinder";
    double plan_height_mm = 40.0, plan_radius_mm = 30.0, plan_force_n = 0.0;
    cmd_plan->add_option("--catalog", plan_catalog, "object catalog JSON");
    cmd_plan->add_option("--object", plan_object, "catalog object name")
        ->needs(cmd_plan->get_option("--catalog"));
    cmd_plan->add_option("--name", plan_name, "label for an ad-hoc cylinder");
    cmd_plan->add_option("--height-mm", plan_height_mm, "ad-hoc cylinder height in mm");
    cmd_plan->add_option("--radius-mm", plan_radius_mm, "ad-hoc cylinder radius in mm");
    cmd_plan->add_option("--force-n", plan_force_n,
                         "close force in N (default: config limit)");

    // clutter-check
    auto* cmd_clutter = app.add_subcommand("clutter-check",
                                           "Leg penetration feasibility for a gap scene");
    std::string scene_path;
    cmd_clutter->add_option("--scene", scene_path, "clutter scene JSON")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("gripperforge");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        design::GripperConfig config;
        if (!config_path.empty()) config = io::load_gripper_config(config_path);
        config.validate();

        if (app.got_subcommand(cmd_beam)) {
            const mechanics::BeamLoadCase c{beam_force_n, units::mm_to_m(beam_length_mm),
                                            units::mm_to_m(beam_diameter_mm)};
            const mechanics::BeamResult res = mechanics::analyze(c, config.material);
            Report r;
            r.add("sigma_max_MPa", units::pa_to_mpa(res.sigma_max_Pa));
            r.add("delta_max_mm", units::m_to_mm(res.delta_max_m));
            r.add("theta_max_deg", units::rad_to_deg(res.theta_max_rad));
            r.add("safety_margin", res.safety_margin);
            print_report(out, r, format);
            return res.safety_margin < 0.0 ? 1 : 0;
        }

        if (app.got_subcommand(cmd_design)) {
            design::DesignRequest req;
            req.total_force_N = design_force_n;
            req.engaged_legs = design_legs;
            req.design_height_m = units::mm_to_m(design_height_mm);
            req.min_margin = design_min_margin;
            if (!stock_mm.empty()) {
                req.stock_diameters_m.clear();
                for (double d : stock_mm)
                    req.stock_diameters_m.push_back(units::mm_to_m(d));
            }
            const double d = design::min_leg_diameter(req, config.material);
            const double per_leg = req.total_force_N / req.engaged_legs;
            const double arm = envelope::effective_arm_length(req.design_height_m,
                                                              config.leg.arm_geometry());
            const double sigma =
                mechanics::max_bending_stress({per_leg, arm, d});
            Report r;
            r.add("diameter_mm", units::m_to_mm(d));
            r.add("safety_margin", mechanics::safety_margin(sigma, config.material));
            print_report(out, r, format);
            return 0;
        }

        if (app.got_subcommand(cmd_env)) {
            if (cmd_env->count("--diameter-mm") == 0)
                env_diameter_mm = units::m_to_mm(config.leg.diameter_m);
            std::vector<int> legs = env_legs;
            std::sort(legs.begin(), legs.end());
            legs.erase(std::unique(legs.begin(), legs.end()), legs.end());

            std::string csv = "height_mm,legs,f_max_N\n";
            std::size_t rows = 0;
            for (int n : legs) {
                const envelope::EnvelopeCurve curve = envelope::envelope_curve(
                    units::mm_to_m(env_min_mm), units::mm_to_m(env_max_mm),
                    units::mm_to_m(env_step_mm), n, units::mm_to_m(env_diameter_mm),
                    config.material, config.leg.arm_geometry());
                for (const envelope::EnvelopePoint& p : curve.points) {
                    csv += fmt(units::m_to_mm(p.object_height_m));
                    csv += ",";
                    csv += std::to_string(p.engaged_legs);
                    csv += ",";
                    csv += fmt(p.f_max_N);
                    csv += "\n";
                    ++rows;
                }
            }
            const std::string path = out_dir + "/envelope.csv";
            io::write_text_file(path, csv);
            out << "wrote " << path << " (" << rows << " rows)\n";
            return 0;
        }

        if (app.got_subcommand(cmd_assess)) {
            if (cmd_assess->count("--force-n") == 0)
                assess_force_n = config.force_command_max_N;
            const std::vector<grasp::ObjectModel> objects = io::load_catalog(catalog_path);
            std::vector<AssessRow> rows;
            bool any_bad = objects.empty();
            for (const grasp::ObjectModel& obj : objects) {
                AssessRow row{grasp::assess_grasp(obj, config, assess_force_n, assess_accel)};
                any_bad = any_bad || !row.report.manipulation_ok || row.report.overload;
                rows.push_back(std::move(row));
            }
            print_assess(out, rows, format);
            return any_bad ? 1 : 0;
        }

        if (app.got_subcommand(cmd_plan)) {
            if (cmd_plan->count("--force-n") == 0)
                plan_force_n = config.force_command_max_N;
            grasp::ObjectModel obj;
            if (!plan_object.empty()) {
                const auto objects = io::load_catalog(plan_catalog);
                const auto it = std::find_if(objects.begin(), objects.end(),
                                             [&](const grasp::ObjectModel& o) {
                                                 return o.name == plan_object;
                                             });
                if (it == objects.end())
                    throw DomainError("object '" + plan_object + "' not found in '" +
                                      plan_catalog + "'");
                obj = *it;
            } else {
                obj.name = plan_name;
                obj.shape = grasp::CylinderShape{units::mm_to_m(plan_radius_mm)};
                obj.height_m = units::mm_to_m(plan_height_mm);
                obj.mass_kg = 0.0;
            }
            const auto steps = trial::build_trial_plan(obj, config, plan_force_n);
            const std::string doc = trial::plan_to_json(steps, obj.name);
            out << doc;
            if (app.count("--out") > 0)
                io::write_text_file(out_dir + "/trial_plan.json", doc);
            return 0;
        }

        if (app.got_subcommand(cmd_clutter)) {
            const trial::ClutterScene scene = io::load_clutter_scene(scene_path);
            const trial::ClutterReport rep = trial::clutter_feasibility(scene, config);
            Report r;
            r.add("feasible", rep.feasible);
            r.add("width_count_ok", rep.width_count_ok);
            r.add("area_ok", rep.area_ok);
            r.add("required_width_mm", units::m_to_mm(rep.required_width_m));
            r.add("required_area_mm2", units::m2_to_mm2(rep.required_area_m2));
            r.add("assigned_area_mm2", units::m2_to_mm2(rep.assigned_area_m2));
            std::string assignment;
            for (std::size_t i = 0; i < rep.legs_per_gap.size(); ++i)
                assignment += (i ? "," : "") + std::to_string(rep.legs_per_gap[i]);
            r.add_text("legs_per_gap", assignment);
            r.add_text("detail", join(rep.detail, "; "));
            print_report(out, r, format);
            return rep.feasible ? 0 : 1;
        }
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace gripperforge::cli
