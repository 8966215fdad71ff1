#pragma once

#include <array>

#include "rxd/core_model.hpp"

namespace rxd {

/// The constant state balancing u1 + u2 <-> u3 + u4 with the given masses.
struct Equilibrium {
  std::array<double, kSpecies> u{};
  Masses masses;
  double volume = 1.0;

  double operator[](int species) const { return u[species]; }
};

/// Closed-form positive solution of
///   u1 u2 = u3 u4,  u1 + u3 = m13/|Omega|,  u1 + u4 = m14/|Omega|,  u2 + u3 = m23/|Omega|.
/// Throws ParameterError for nonpositive masses or volume and
/// NoEquilibriumError when m14 + m23 - m13 <= 0.
Equilibrium compute_equilibrium(const Masses& masses, double volume);

/// Residuals (u1 u2 - u3 u4, m13/V - (u1 + u3), m14/V - (u1 + u4), m23/V - (u2 + u3)).
std::array<double, 4> equilibrium_residual(const Equilibrium& eq);

/// The equilibrium as a constant state on grid.
State equilibrium_state(const Equilibrium& eq, const GridPtr& grid, double time = 0.0);

}  // namespace rxd
