#include "rxd/equilibrium.hpp"

#include <cmath>

namespace rxd {

Equilibrium compute_equilibrium(const Masses& masses, double volume) {
  if (!(volume > 0.0) || !std::isfinite(volume)) {
    throw ParameterError("equilibrium volume must be positive");
  }
  masses.validate_positive();

  const double a = masses.m13 / volume;
  const double b = masses.m14 / volume;
  const double c = masses.m23 / volume;
  const double bc = b + c;
  const double excess = bc - a;  // m24 / |Omega|

  Equilibrium eq;
  eq.u = {a * b / bc, c * excess / bc, a * c / bc, b * excess / bc};
  eq.masses = Masses::from_independent(masses.m13, masses.m14, masses.m23);
  eq.volume = volume;
  for (double v : eq.u) {
    if (!(v > 0.0)) throw NoEquilibriumError("masses admit no strictly positive equilibrium");
  }
  return eq;
}

std::array<double, 4> equilibrium_residual(const Equilibrium& eq) {
  const auto& u = eq.u;
  const double v = eq.volume;
  return {u[0] * u[1] - u[2] * u[3], eq.masses.m13 / v - (u[0] + u[2]), eq.masses.m14 / v - (u[0] + u[3]),
          eq.masses.m23 / v - (u[1] + u[2])};
}

State equilibrium_state(const Equilibrium& eq, const GridPtr& grid, double time) {
  return State::constant(grid, eq.u, time);
}

}  // namespace rxd
