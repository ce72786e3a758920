#pragma once

#include <string>
#include <vector>

#include "gripperforge/design.hpp"
#include "gripperforge/errors.hpp"
#include "gripperforge/grasp.hpp"
#include "gripperforge/trial.hpp"

// File formats: JSON configs, object catalogs, and clutter scenes. External
// units are millimeters, grams, degrees, MPa/GPa; everything is converted to
// SI on load. Unreadable or malformed files raise IoError; structurally
// sound files with out-of-range values raise DomainError.

namespace gripperforge::io {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Loads a gripper description; every field is optional and falls back to the
// built-in defaults. See README for the schema.
design::GripperConfig load_gripper_config(const std::string& path);

// Inverse of load_gripper_config: emits the documented external-unit schema.
// Loading the emitted text reproduces the config to within 1e-9 relative.
std::string gripper_config_to_json(const design::GripperConfig& config);

// Loads an object catalog: array of records with a shape tag (cylinder, box,
// irregular), dimensions in mm, mass in grams, optional friction (default
// 0.8). Every object is validated on load.
std::vector<grasp::ObjectModel> load_catalog(const std::string& path);

// Loads a clutter scene: gap list in mm plus an optional entry margin.
trial::ClutterScene load_clutter_scene(const std::string& path);

} // namespace gripperforge::io
