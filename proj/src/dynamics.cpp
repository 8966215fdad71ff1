#include "rxd/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rxd {

namespace {

using Values = std::array<std::vector<double>, kSpecies>;

constexpr double kTinySup = 1e-12;

Values values_of(const State& s) {
  Values v;
  for (int k = 0; k < kSpecies; ++k) v[k].assign(s[k].values().begin(), s[k].values().end());
  return v;
}

double max_sup(const Values& v) {
  double m = 0.0;
  for (const auto& f : v) {
    for (double x : f) m = std::max(m, std::abs(x));
  }
  return m;
}

double stable_dt(const Values& v, double theta) { return theta / std::max(max_sup(v), kTinySup); }

// u_i += dt f_i with r = u1 u2 - u3 u4 computed once per cell.
Values euler(const Values& u, double dt) {
  Values out = u;
  const std::size_t n = u[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    const double r = u[0][c] * u[1][c] - u[2][c] * u[3][c];
    const double loss = dt * -r;
    const double gain = dt * r;
    out[0][c] = u[0][c] + loss;
    out[1][c] = u[1][c] + loss;
    out[2][c] = u[2][c] + gain;
    out[3][c] = u[3][c] + gain;
  }
  return out;
}

// a * x + b * y, cellwise.
Values blend(double a, const Values& x, double b, const Values& y) {
  Values out = x;
  for (int k = 0; k < kSpecies; ++k) {
    for (std::size_t c = 0; c < x[k].size(); ++c) out[k][c] = a * x[k][c] + b * y[k][c];
  }
  return out;
}

void check_values(const Values& v, double time, const char* stage) {
  for (int k = 0; k < kSpecies; ++k) {
    for (std::size_t c = 0; c < v[k].size(); ++c) {
      const double x = v[k][c];
      if (!std::isfinite(x)) {
        std::ostringstream os;
        os << stage << ": non-finite value in u" << k + 1 << " at cell " << c << " (t = " << time << ")";
        throw NumericalFailure(os.str(), time);
      }
      if (x < 0.0) {
        std::ostringstream os;
        os << stage << ": negative value " << x << " in u" << k + 1 << " at cell " << c << " (t = " << time << ")";
        throw NumericalFailure(os.str(), time);
      }
    }
  }
}

State to_state(const GridPtr& grid, Values v, double time) {
  return State({Field(grid, std::move(v[0])), Field(grid, std::move(v[1])), Field(grid, std::move(v[2])),
                Field(grid, std::move(v[3]))},
               time);
}

Values sweep(Values u, double dt, double theta, double time) {
  double remaining = dt;
  while (remaining > 0.0) {
    double h = std::min(remaining, stable_dt(u, theta));
    for (;;) {
      const Values s1 = euler(u, h);
      if (h > stable_dt(s1, 1.0)) {
        h *= 0.5;
        continue;
      }
      const Values s2 = blend(0.75, u, 0.25, euler(s1, h));
      if (h > stable_dt(s2, 1.0)) {
        h *= 0.5;
        continue;
      }
      u = blend(1.0 / 3.0, u, 2.0 / 3.0, euler(s2, h));
      break;
    }
    check_values(u, time, "reaction sweep");
    remaining = (h >= remaining) ? 0.0 : remaining - h;
  }
  return u;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt_max > 0.0)) throw ParameterError("integrator.dt_max must be positive");
  if (!(theta > 0.0 && theta <= 1.0)) throw ParameterError("integrator.theta must lie in (0, 1]");
  if (!(t_end > 0.0)) throw ParameterError("integrator.t_end must be positive");
  if (!(cg_tolerance > 0.0)) throw ParameterError("integrator.cg_tolerance must be positive");
}

std::array<Field, kSpecies> reaction_rates(const State& state) {
  const std::size_t n = state[0].size();
  std::vector<double> loss(n), gain(n);
  for (std::size_t c = 0; c < n; ++c) {
    const double r = state[0][c] * state[1][c] - state[2][c] * state[3][c];
    loss[c] = -r;
    gain[c] = r;
  }
  const GridPtr& g = state.grid();
  return {Field(g, loss), Field(g, loss), Field(g, gain), Field(g, gain)};
}

double max_stable_reaction_dt(const State& state, double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) throw ParameterError("theta must lie in (0, 1]");
  double m = 0.0;
  for (int k = 0; k < kSpecies; ++k) m = std::max(m, linf_norm(state[k]));
  return theta / std::max(m, kTinySup);
}

State reaction_substep(const State& state, double dt) {
  if (!(dt >= 0.0)) throw ParameterError("reaction_substep: dt must be nonnegative");
  const double bound = max_stable_reaction_dt(state, 1.0);
  if (dt > bound * (1.0 + 1e-14)) {
    std::ostringstream os;
    os << "reaction_substep: dt = " << dt << " exceeds the positivity bound " << bound;
    throw ContractError(os.str());
  }
  Values v = euler(values_of(state), dt);
  check_values(v, state.time() + dt, "reaction substep");
  return to_state(state.grid(), std::move(v), state.time() + dt);
}

State reaction_sweep(const State& state, double dt, double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) throw ParameterError("theta must lie in (0, 1]");
  if (!(dt >= 0.0)) throw ParameterError("reaction_sweep: dt must be nonnegative");
  Values v = sweep(values_of(state), dt, theta, state.time());
  return to_state(state.grid(), std::move(v), state.time() + dt);
}

Stepper::Stepper(LaplacianStencil stencil, DiffusionCoeffs d, IntegratorConfig cfg)
    : stencil_(std::move(stencil)), d_(d), cfg_(cfg) {
  d_.validate();
  cfg_.validate();
}

const HeatPropagator& Stepper::propagator(int species, double tau) {
  const auto key = std::make_pair(species, tau);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  if (cache_.size() >= 32) cache_.clear();
  return cache_.emplace(key, HeatPropagator(stencil_, d_[species] * tau)).first->second;
}

State Stepper::diffuse(const State& state, double tau) {
  std::array<Field, kSpecies> out = state.fields();
  for (int k = 0; k < kSpecies; ++k) {
    if (d_[k] == 0.0) continue;
    if (cfg_.diffusion == DiffusionScheme::exact) {
      out[k] = propagator(k, tau).apply(state[k]);
    } else {
      out[k] = implicit_diffusion_solve(stencil_, state[k], d_[k], tau, cfg_.cg_tolerance);
    }
  }
  Values v;
  for (int k = 0; k < kSpecies; ++k) v[k].assign(out[k].values().begin(), out[k].values().end());
  check_values(v, state.time(), "diffusion");
  return to_state(state.grid(), std::move(v), state.time());
}

State Stepper::step(const State& state, double dt) { return step(state, dt, state.time() + dt); }

State Stepper::step(const State& state, double dt, double new_time) {
  if (!(dt > 0.0)) throw ParameterError("step: dt must be positive");
  require_same_grid(stencil_.grid, state[0], "Stepper::step");
  State s = state;
  if (cfg_.splitting == Splitting::strang) {
    s = diffuse(s, 0.5 * dt);
    if (cfg_.reaction) s = reaction_sweep(s, dt, cfg_.theta);
    s = diffuse(s, 0.5 * dt);
  } else {
    s = diffuse(s, dt);
    if (cfg_.reaction) s = reaction_sweep(s, dt, cfg_.theta);
  }
  std::array<Field, kSpecies> f = s.fields();
  return State(std::move(f), new_time);
}

State strang_step(const State& state, const DiffusionCoeffs& d, const LaplacianStencil& stencil, double dt,
                  const IntegratorConfig& cfg) {
  IntegratorConfig c = cfg;
  c.dt_max = std::max(c.dt_max, dt);
  Stepper stepper(stencil, d, c);
  return stepper.step(state, dt);
}

namespace {

double mass_drift(const Masses& now, const Masses& ref) {
  const double scale = ref.scale();
  return std::max({std::abs(now.m13 - ref.m13), std::abs(now.m14 - ref.m14), std::abs(now.m23 - ref.m23)}) /
         scale;
}

std::string snapshot(const DiagnosticsRecord& r) {
  std::ostringstream os;
  os.precision(17);
  os << "last sample t = " << r.t << ", H = " << r.H << ", D = " << r.D << ", masses = (" << r.masses.m13 << ", "
     << r.masses.m14 << ", " << r.masses.m23 << ")";
  return os.str();
}

}  // namespace

TrajectoryRecord evolve(const State& initial, const DiffusionCoeffs& d, const IntegratorConfig& cfg,
                        double sample_every, const EvolveOptions& options) {
  cfg.validate();
  if (!(sample_every > 0.0)) throw ParameterError("sample_every must be positive");
  const GridPtr& grid = initial.grid();
  const LaplacianStencil stencil(grid);
  const Masses m0 = masses_of(initial);
  const Equilibrium eq = compute_equilibrium(m0, grid->volume());
  const double q = options.q.value_or(entropy_method_q(grid->dimension()));
  Stepper stepper(stencil, d, cfg);

  TrajectoryRecord rec{{}, {}, initial, 0, 0.0};
  rec.times.push_back(initial.time());
  rec.diagnostics.push_back(diagnose(initial, eq, d, stencil, q));

  State state = initial;
  const double t0 = initial.time();
  const double t_end = t0 + cfg.t_end;
  std::size_t sample_index = 1;
  double t = t0;
  while (t < t_end) {
    const double target = std::min(t0 + static_cast<double>(sample_index) * sample_every, t_end);
    const double gap = target - t;
    double dt = cfg.dt_max;
    double new_time = t + dt;
    bool lands = false;
    if (gap <= cfg.dt_max * (1.0 + 1e-9)) {
      dt = gap;
      new_time = target;
      lands = true;
    }
    try {
      state = stepper.step(state, dt, new_time);
    } catch (const NumericalFailure& e) {
      throw NumericalFailure(std::string(e.what()) + "; " + snapshot(rec.diagnostics.back()), t);
    }
    t = new_time;
    ++rec.steps;

    const double drift = mass_drift(masses_of(state), m0);
    rec.max_mass_drift = std::max(rec.max_mass_drift, drift);
    if (drift > options.mass_tolerance) {
      std::ostringstream os;
      os << "relative mass drift " << drift << " exceeds " << options.mass_tolerance << "; "
         << snapshot(rec.diagnostics.back());
      throw NumericalFailure(os.str(), t);
    }
    if (lands) {
      rec.times.push_back(t);
      rec.diagnostics.push_back(diagnose(state, eq, d, stencil, q));
      ++sample_index;
    }
  }
  rec.final_state = std::move(state);
  return rec;
}

}  // namespace rxd
