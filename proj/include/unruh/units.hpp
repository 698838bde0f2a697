#pragma once

#include <string>
#include <vector>

namespace unruh {

/// A consistent set of the constants that appear in dimensional formulas.
///
/// The default is CODATA 2018 in SI. `natural()` sets hbar = c = k = 1 exactly;
/// G keeps its SI value there but nothing in the natural-unit code paths reads it.
struct PhysicalConstants {
  double hbar;         // J s
  double c;            // m / s
  double k_boltzmann;  // J / K
  double G;            // m^3 / (kg s^2)

  static PhysicalConstants codata2018();
  static PhysicalConstants natural();

  /// Throws DomainError unless every field is finite and positive.
  void validate() const;
};

enum class UnitSystem { si, natural };

PhysicalConstants constants_for(UnitSystem system);

/// T = hbar a / (2 pi k c).
double unruh_temperature(double accel, const PhysicalConstants& consts);

/// Newtonian a = G M / r^2.
double surface_gravity(double mass, double radius, const PhysicalConstants& consts);

/// r_s = 2 G M / c^2.
double schwarzschild_radius(double mass, const PhysicalConstants& consts);

struct ExerciseRow {
  std::string body;
  double mass_kg;
  double radius_m;
  double accel_m_s2;
  double temperature_K;
};

/// Unruh temperature at the surface of the Earth, the Sun and a one-solar-mass
/// Schwarzschild black hole (surface taken at r_s, acceleration GM/r_s^2).
std::vector<ExerciseRow> exercise_table(const PhysicalConstants& consts);

namespace bodies {
// Earth: IERS/IAU nominal mass and equatorial radius.
inline constexpr double earth_mass_kg = 5.9722e24;
inline constexpr double earth_radius_m = 6.3781e6;
// Sun: mass as tabulated in older IAU sets, IAU 2015 nominal photospheric radius.
inline constexpr double sun_mass_kg = 1.98892e30;
inline constexpr double sun_radius_m = 6.957e8;
}  // namespace bodies

}  // namespace unruh
