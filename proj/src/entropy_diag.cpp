#include "rxd/entropy_diag.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace rxd {

double phi(double x) {
  if (x == 0.0) return 1.0;
  const double e = x - 1.0;
  if (std::abs(e) < 0.5) return x * std::log1p(e) - e;
  return x * std::log(x) - e;
}

double reaction_log_term(double a, double b) {
  if (a == b) return 0.0;
  if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
  return (a - b) * (std::log(a) - std::log(b));
}

double relative_entropy(const State& state, const Equilibrium& eq) {
  double sum = 0.0;
  for (int s = 0; s < kSpecies; ++s) {
    const double ref = eq[s];
    double part = 0.0;
    for (double v : state[s].values()) part += phi(v / ref);
    sum += ref * part;
  }
  return state.grid()->cell_volume() * sum;
}

namespace {

Field sqrt_field(const Field& f) {
  std::vector<double> v(f.values().begin(), f.values().end());
  for (double& x : v) x = std::sqrt(x);
  return Field(f.grid(), std::move(v));
}

}  // namespace

Production entropy_production(const State& state, const DiffusionCoeffs& d, const LaplacianStencil& stencil) {
  require_same_grid(stencil.grid, state[0], "entropy_production");
  double fisher = 0.0;
  for (int s = 0; s < kSpecies; ++s) {
    if (d[s] > 0.0) fisher += 4.0 * d[s] * face_gradient_sq_integral(stencil, sqrt_field(state[s]));
  }
  double reaction = 0.0;
  const std::size_t n = state[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    const double r = reaction_log_term(state[0][c] * state[1][c], state[2][c] * state[3][c]);
    if (std::isinf(r)) return {std::numeric_limits<double>::infinity(), true};
    reaction += r;
  }
  return {fisher + state.grid()->cell_volume() * reaction, false};
}

double fisher_surrogate(const State& state, const DiffusionCoeffs& d, const LaplacianStencil& stencil) {
  require_same_grid(stencil.grid, state[0], "fisher_surrogate");
  double grad = 0.0;
  for (int s = 0; s < 3; ++s) grad += d[s] * face_gradient_sq_integral(stencil, sqrt_field(state[s]));
  double prod = 0.0;
  const std::size_t n = state[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    const double diff = std::sqrt(state[0][c]) * std::sqrt(state[1][c]) - std::sqrt(state[2][c]) * std::sqrt(state[3][c]);
    prod += diff * diff;
  }
  return 4.0 * (grad + state.grid()->cell_volume() * prod);
}

double sqrt_variance(const Field& f) {
  double mean = 0.0;
  for (double v : f.values()) mean += std::sqrt(v);
  mean /= static_cast<double>(f.size());
  double sum = 0.0;
  for (double v : f.values()) {
    const double dev = std::sqrt(v) - mean;
    sum += dev * dev;
  }
  return f.grid()->cell_volume() * sum;
}

std::optional<double> ckp_ratio(const State& state, const Equilibrium& eq, MassCheck check) {
  if (check == MassCheck::enforce) {
    const Masses m = masses_of(state);
    const double tol = 1e-10 * eq.masses.scale();
    if (std::abs(m.m13 - eq.masses.m13) > tol || std::abs(m.m14 - eq.masses.m14) > tol ||
        std::abs(m.m23 - eq.masses.m23) > tol) {
      throw ContractError("ckp_ratio: state masses differ from the equilibrium masses");
    }
  }
  double denom = 0.0;
  for (int s = 0; s < kSpecies; ++s) {
    double l1 = 0.0;
    for (double v : state[s].values()) l1 += std::abs(v - eq[s]);
    l1 *= state.grid()->cell_volume();
    denom += l1 * l1;
  }
  const double h = relative_entropy(state, eq);
  if (denom < 1e-14) {
    if (!(h < 1e-12)) {
      std::ostringstream os;
      os << "ckp_ratio: L1 distance vanishes but H = " << h;
      throw ContractError(os.str());
    }
    return std::nullopt;
  }
  return h / denom;
}

double entropy_method_q(int dimension, double gamma) {
  if (dimension == 1) return 1.0;
  if (dimension == 2) {
    if (!(gamma > 0.0)) throw ParameterError("gamma must be positive");
    return 1.0 + gamma;
  }
  if (dimension >= 3) return dimension / 2.0;
  throw ParameterError("dimension must be positive");
}

DiagnosticsRecord diagnose(const State& state, const Equilibrium& eq, const DiffusionCoeffs& d,
                           const LaplacianStencil& stencil, double q) {
  DiagnosticsRecord rec;
  rec.t = state.time();
  rec.H = relative_entropy(state, eq);
  rec.D = entropy_production(state, d, stencil).value;
  rec.D_tilde = fisher_surrogate(state, d, stencil);
  rec.masses = masses_of(state);
  const double vol = state.grid()->cell_volume();
  for (int s = 0; s < kSpecies; ++s) {
    const Field& f = state[s];
    rec.linf[s] = linf_norm(f);
    rec.lq[s] = lp_norm(f, q);
    double dmax = 0.0;
    double l1 = 0.0;
    for (double v : f.values()) {
      const double dev = std::abs(v - eq[s]);
      dmax = std::max(dmax, dev);
      l1 += dev;
    }
    rec.linf_dist[s] = dmax;
    rec.l1_dist[s] = vol * l1;
  }
  rec.sqrt_var_u4 = sqrt_variance(state[3]);
  return rec;
}

}  // namespace rxd
