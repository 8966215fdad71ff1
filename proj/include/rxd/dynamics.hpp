#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "rxd/core_model.hpp"
#include "rxd/discrete_ops.hpp"
#include "rxd/entropy_diag.hpp"
#include "rxd/equilibrium.hpp"

namespace rxd {

enum class Splitting { lie, strang };

/// How a diffusion sub-step of length tau is propagated.
///  - exact: the discrete heat semigroup exp(tau d L) (positive, second order
///    inside Strang splitting);
///  - implicit_euler: one backward-Euler solve (positive, first order).
enum class DiffusionScheme { exact, implicit_euler };

struct IntegratorConfig {
  double dt_max = 1e-2;
  double theta = 0.9;
  double t_end = 1.0;
  Splitting splitting = Splitting::strang;
  DiffusionScheme diffusion = DiffusionScheme::exact;
  bool reaction = true;
  double cg_tolerance = 1e-12;

  void validate() const;
};

/// f1 = f2 = -(u1 u2 - u3 u4), f3 = f4 = +(u1 u2 - u3 u4), cellwise.
std::array<Field, kSpecies> reaction_rates(const State& state);

/// theta / max(||u_i||_inf, tiny). Below this bound an explicit reaction
/// step keeps every cell nonnegative.
double max_stable_reaction_dt(const State& state, double theta);

/// Explicit Euler reaction update u_i += dt f_i. Throws ContractError if
/// dt exceeds max_stable_reaction_dt(state, 1).
State reaction_substep(const State& state, double dt);

/// Reaction flow over [t, t + dt] with the third-order SSP Runge-Kutta
/// scheme, built from convex combinations of reaction_substep and
/// subdivided so every stage respects the positivity bound with factor theta.
State reaction_sweep(const State& state, double dt, double theta);

/// Splitting integrator bound to one grid and set of coefficients. Caches the
/// heat kernels per step size, so repeated steps with the same dt are cheap.
class Stepper {
 public:
  Stepper(LaplacianStencil stencil, DiffusionCoeffs d, IntegratorConfig cfg);

  /// One split step of length dt. Throws NumericalFailure on NaN/Inf or a
  /// negative cell.
  State step(const State& state, double dt);
  /// Same, stamping the result with new_time instead of state.time() + dt.
  State step(const State& state, double dt, double new_time);

  const LaplacianStencil& stencil() const { return stencil_; }
  const DiffusionCoeffs& coefficients() const { return d_; }
  const IntegratorConfig& config() const { return cfg_; }

 private:
  State diffuse(const State& state, double tau);
  const HeatPropagator& propagator(int species, double tau);

  LaplacianStencil stencil_;
  DiffusionCoeffs d_;
  IntegratorConfig cfg_;
  std::map<std::pair<int, double>, HeatPropagator> cache_;
};

/// Half diffusion, reaction sweep over dt, half diffusion (or Lie: diffusion
/// then reaction when cfg.splitting == lie).
State strang_step(const State& state, const DiffusionCoeffs& d, const LaplacianStencil& stencil, double dt,
                  const IntegratorConfig& cfg = {});

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<DiagnosticsRecord> diagnostics;
  State final_state;
  std::size_t steps = 0;
  double max_mass_drift = 0.0;
};

struct EvolveOptions {
  /// q for the L^q norms in each record; nullopt picks the dimension default.
  std::optional<double> q;
  /// Relative mass drift that aborts the run.
  double mass_tolerance = 1e-10;
};

/// Integrates from `initial` to cfg.t_end, recording diagnostics at t = 0
/// and every sample_every. Steps are shortened to land on sample times.
/// The equilibrium is the one fixed by the initial masses.
TrajectoryRecord evolve(const State& initial, const DiffusionCoeffs& d, const IntegratorConfig& cfg,
                        double sample_every, const EvolveOptions& options = {});

}  // namespace rxd
