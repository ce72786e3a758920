#include "gripperforge/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gripperforge/units.hpp"

namespace gripperforge::io {

namespace {

using json = nlohmann::ordered_json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw IoError("malformed JSON in '" + path + "': " + e.what());
    }
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof())
        throw IoError("error while reading '" + path + "'");
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out.good())
        throw IoError("error while writing '" + path + "'");
}

design::GripperConfig load_gripper_config(const std::string& path) {
    const json j = parse_file(path);
    design::GripperConfig cfg;
    try {
        cfg.legs = j.value("legs", cfg.legs);
        cfg.leg.length_m = units::mm_to_m(j.value("leg_length_mm", units::m_to_mm(cfg.leg.length_m)));
        cfg.leg.pad_length_m =
            units::mm_to_m(j.value("pad_length_mm", units::m_to_mm(cfg.leg.pad_length_m)));
        cfg.leg.tip_clearance_m =
            units::mm_to_m(j.value("tip_clearance_mm", units::m_to_mm(cfg.leg.tip_clearance_m)));
        cfg.leg.diameter_m =
            units::mm_to_m(j.value("leg_diameter_mm", units::m_to_mm(cfg.leg.diameter_m)));
        cfg.leg.footprint_area_m2 = units::mm2_to_m2(
            j.value("footprint_area_mm2", units::m2_to_mm2(cfg.leg.footprint_area_m2)));
        cfg.leg.inclination_rad = units::deg_to_rad(
            j.value("inclination_deg", units::rad_to_deg(cfg.leg.inclination_rad)));
        cfg.opening_min_m =
            units::mm_to_m(j.value("opening_min_mm", units::m_to_mm(cfg.opening_min_m)));
        cfg.opening_max_m =
            units::mm_to_m(j.value("opening_max_mm", units::m_to_mm(cfg.opening_max_m)));
        cfg.opening_accuracy_m =
            units::mm_to_m(j.value("opening_accuracy_mm", units::m_to_mm(cfg.opening_accuracy_m)));
        cfg.force_command_max_N = j.value("force_command_max_n", cfg.force_command_max_N);
        if (j.contains("material")) {
            const json& m = j.at("material");
            cfg.material.name = m.value("name", cfg.material.name);
            cfg.material.young_modulus_Pa = units::gpa_to_pa(
                m.value("young_modulus_gpa", units::pa_to_gpa(cfg.material.young_modulus_Pa)));
            cfg.material.yield_strength_Pa = units::mpa_to_pa(
                m.value("yield_strength_mpa", units::pa_to_mpa(cfg.material.yield_strength_Pa)));
        }
    } catch (const json::exception& e) {
        throw DomainError("bad gripper config '" + path + "': " + e.what());
    }
    cfg.validate();
    return cfg;
}

std::string gripper_config_to_json(const design::GripperConfig& cfg) {
    json j;
    j["legs"] = cfg.legs;
    j["leg_length_mm"] = units::m_to_mm(cfg.leg.length_m);
    j["pad_length_mm"] = units::m_to_mm(cfg.leg.pad_length_m);
    j["tip_clearance_mm"] = units::m_to_mm(cfg.leg.tip_clearance_m);
    j["leg_diameter_mm"] = units::m_to_mm(cfg.leg.diameter_m);
    j["footprint_area_mm2"] = units::m2_to_mm2(cfg.leg.footprint_area_m2);
    j["inclination_deg"] = units::rad_to_deg(cfg.leg.inclination_rad);
    j["opening_min_mm"] = units::m_to_mm(cfg.opening_min_m);
    j["opening_max_mm"] = units::m_to_mm(cfg.opening_max_m);
    j["opening_accuracy_mm"] = units::m_to_mm(cfg.opening_accuracy_m);
    j["force_command_max_n"] = cfg.force_command_max_N;
    j["material"] = {{"name", cfg.material.name},
                     {"young_modulus_gpa", units::pa_to_gpa(cfg.material.young_modulus_Pa)},
                     {"yield_strength_mpa", units::pa_to_mpa(cfg.material.yield_strength_Pa)}};
    return j.dump(2) + "\n";
}

std::vector<grasp::ObjectModel> load_catalog(const std::string& path) {
    const json j = parse_file(path);
    std::vector<grasp::ObjectModel> objects;
    try {
        for (const json& rec : j.at("objects")) {
            grasp::ObjectModel obj;
            obj.name = rec.at("name").get<std::string>();
            const std::string shape = rec.at("shape").get<std::string>();
            if (shape == "cylinder") {
                obj.shape = grasp::CylinderShape{units::mm_to_m(rec.at("radius_mm").get<double>())};
            } else if (shape == "box") {
                obj.shape = grasp::BoxShape{units::mm_to_m(rec.at("width_mm").get<double>()),
                                            units::mm_to_m(rec.at("depth_mm").get<double>())};
            } else if (shape == "irregular") {
                grasp::PolygonShape poly;
                for (const json& v : rec.at("polygon_mm"))
                    poly.cross_section_m.vertices.push_back(
                        {units::mm_to_m(v.at(0).get<double>()),
                         units::mm_to_m(v.at(1).get<double>())});
                obj.shape = std::move(poly);
            } else {
                throw DomainError("catalog '" + path + "': object '" + obj.name +
                                  "' has unknown shape '" + shape + "'");
            }
            obj.height_m = units::mm_to_m(rec.at("height_mm").get<double>());
            obj.mass_kg = units::g_to_kg(rec.at("mass_g").get<double>());
            obj.friction_coeff = rec.value("friction", obj.friction_coeff);
            obj.validate();
            objects.push_back(std::move(obj));
        }
    } catch (const json::exception& e) {
        throw DomainError("bad object catalog '" + path + "': " + e.what());
    }
    return objects;
}

trial::ClutterScene load_clutter_scene(const std::string& path) {
    const json j = parse_file(path);
    trial::ClutterScene scene;
    try {
        scene.entry_margin_m = units::mm_to_m(
            j.value("entry_margin_mm", units::m_to_mm(scene.entry_margin_m)));
        for (const json& g : j.at("gaps"))
            scene.gaps.push_back({units::mm_to_m(g.at("width_mm").get<double>()),
                                  units::mm_to_m(g.at("depth_mm").get<double>())});
    } catch (const json::exception& e) {
        throw DomainError("bad clutter scene '" + path + "': " + e.what());
    }
    scene.validate();
    return scene;
}

} // namespace gripperforge::io
