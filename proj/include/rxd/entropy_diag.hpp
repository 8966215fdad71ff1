#pragma once

#include <array>
#include <optional>

#include "rxd/core_model.hpp"
#include "rxd/discrete_ops.hpp"
#include "rxd/equilibrium.hpp"

namespace rxd {

/// phi(x) = x log x - x + 1, extended by phi(0) = 1.
double phi(double x);

/// (a - b) log(a / b) with r(a, a) = 0 and r(a, 0) = r(0, b) = +inf for a, b > 0.
double reaction_log_term(double a, double b);

/// Entropy production value; `infinite` marks the +inf convention of the
/// reaction log term (value is then +inf as well).
struct Production {
  double value = 0.0;
  bool infinite = false;
};

/// H(u | u_inf) = sum_i int u_inf_i phi(u_i / u_inf_i).
double relative_entropy(const State& state, const Equilibrium& eq);

/// D(u) = sum_{d_i > 0} 4 d_i ||grad sqrt(u_i)||^2 + int (u1 u2 - u3 u4) log(u1 u2 / (u3 u4)).
Production entropy_production(const State& state, const DiffusionCoeffs& d, const LaplacianStencil& stencil);

/// 4 (sum_{i<=3} d_i ||grad sqrt(u_i)||^2 + ||sqrt(u1 u2) - sqrt(u3 u4)||^2). Always finite.
double fisher_surrogate(const State& state, const DiffusionCoeffs& d, const LaplacianStencil& stencil);

/// ||sqrt(f) - avg sqrt(f)||^2 in L^2.
double sqrt_variance(const Field& f);

enum class MassCheck { enforce, skip };

/// H / sum_i ||u_i - u_inf_i||_{L1}^2, or nullopt when both vanish.
/// With MassCheck::enforce, throws ContractError when the state's masses
/// differ from eq.masses by more than 1e-10 relative.
std::optional<double> ckp_ratio(const State& state, const Equilibrium& eq, MassCheck check = MassCheck::enforce);

/// Default q exponent of the entropy-method bound: 1 in 1D, 1 + gamma in 2D,
/// N / 2 for N >= 3.
double entropy_method_q(int dimension, double gamma = 1.0);

/// One time sample of every scalar functional tracked along a trajectory.
struct DiagnosticsRecord {
  double t = 0.0;
  double H = 0.0;
  double D = 0.0;  // +inf when the production is flagged infinite
  double D_tilde = 0.0;
  Masses masses;
  std::array<double, kSpecies> linf{};
  std::array<double, kSpecies> lq{};
  std::array<double, kSpecies> linf_dist{};
  std::array<double, kSpecies> l1_dist{};
  double sqrt_var_u4 = 0.0;
};

DiagnosticsRecord diagnose(const State& state, const Equilibrium& eq, const DiffusionCoeffs& d,
                           const LaplacianStencil& stencil, double q);

}  // namespace rxd
