#pragma once

#include <numbers>

// Conversions between the external presentation units (mm, g, degrees, MPa,
// GPa) and the SI base units used everywhere inside the library.

namespace gripperforge::units {

inline constexpr double kPi = std::numbers::pi;

constexpr double mm_to_m(double mm) { return mm * 1e-3; }
constexpr double m_to_mm(double m) { return m * 1e3; }

constexpr double mm2_to_m2(double mm2) { return mm2 * 1e-6; }
constexpr double m2_to_mm2(double m2) { return m2 * 1e6; }

constexpr double g_to_kg(double g) { return g * 1e-3; }
constexpr double kg_to_g(double kg) { return kg * 1e3; }

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

constexpr double mpa_to_pa(double mpa) { return mpa * 1e6; }
constexpr double pa_to_mpa(double pa) { return pa * 1e-6; }

constexpr double gpa_to_pa(double gpa) { return gpa * 1e9; }
constexpr double pa_to_gpa(double pa) { return pa * 1e-9; }

} // namespace gripperforge::units
