#include "unruh/units.hpp"

#include <cmath>
#include <numbers>

#include "unruh/errors.hpp"

namespace unruh {

namespace {

void require_positive(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string(what) + " must be finite and positive");
  }
}

}  // namespace

PhysicalConstants PhysicalConstants::codata2018() {
  return {1.054571817e-34, 299792458.0, 1.380649e-23, 6.67430e-11};
}

PhysicalConstants PhysicalConstants::natural() {
  return {1.0, 1.0, 1.0, 6.67430e-11};
}

void PhysicalConstants::validate() const {
  require_positive(hbar, "hbar");
  require_positive(c, "c");
  require_positive(k_boltzmann, "k_boltzmann");
  require_positive(G, "G");
}

PhysicalConstants constants_for(UnitSystem system) {
  return system == UnitSystem::si ? PhysicalConstants::codata2018()
                                  : PhysicalConstants::natural();
}

double unruh_temperature(double accel, const PhysicalConstants& consts) {
  require_positive(accel, "acceleration");
  return consts.hbar * accel / (2.0 * std::numbers::pi * consts.k_boltzmann * consts.c);
}

double surface_gravity(double mass, double radius, const PhysicalConstants& consts) {
  require_positive(mass, "mass");
  require_positive(radius, "radius");
  return consts.G * mass / (radius * radius);
}

double schwarzschild_radius(double mass, const PhysicalConstants& consts) {
  require_positive(mass, "mass");
  return 2.0 * consts.G * mass / (consts.c * consts.c);
}

std::vector<ExerciseRow> exercise_table(const PhysicalConstants& consts) {
  struct Body {
    const char* name;
    double mass;
    double radius;
  };
  const Body rows[] = {
      {"earth", bodies::earth_mass_kg, bodies::earth_radius_m},
      {"sun", bodies::sun_mass_kg, bodies::sun_radius_m},
      {"black_hole", bodies::sun_mass_kg, schwarzschild_radius(bodies::sun_mass_kg, consts)},
  };

  std::vector<ExerciseRow> table;
  for (const auto& b : rows) {
    const double a = surface_gravity(b.mass, b.radius, consts);
    table.push_back({b.name, b.mass, b.radius, a, unruh_temperature(a, consts)});
  }
  return table;
}

}  // namespace unruh
