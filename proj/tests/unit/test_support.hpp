#pragma once

// Shared generators and independent oracles for the unit tests.

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "rxd/core_model.hpp"

namespace rxd::test {

inline Field random_field(const GridPtr& g, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(g->cell_count());
  for (double& x : v) x = u(rng);
  return Field(g, std::move(v));
}

inline State random_positive_state(const GridPtr& g, std::mt19937_64& rng, double lo = 0.2, double hi = 2.0) {
  return State({random_field(g, rng, lo, hi), random_field(g, rng, lo, hi), random_field(g, rng, lo, hi),
                random_field(g, rng, lo, hi)});
}

inline double weighted_dot(const Field& a, const Field& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return a.grid()->cell_volume() * s;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

/// Dense Gaussian elimination with partial pivoting.
template <std::size_t N>
std::array<double, N> dense_solve(std::array<std::array<double, N>, N> a, std::array<double, N> b) {
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < N; ++i) {
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    }
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < N; ++i) {
      const double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < N; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::array<double, N> x{};
  for (std::size_t k = N; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < N; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return x;
}

/// Newton iteration on the 4x4 equilibrium system, independent of the closed form.
inline std::array<double, 4> newton_equilibrium(double a, double b, double c) {
  std::array<double, 4> u{a / 2, c / 2, a / 2, b / 2};
  for (int it = 0; it < 100; ++it) {
    const std::array<double, 4> f{u[0] * u[1] - u[2] * u[3], u[0] + u[2] - a, u[0] + u[3] - b, u[1] + u[2] - c};
    std::array<std::array<double, 4>, 4> j{{{u[1], u[0], -u[3], -u[2]}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}}};
    const auto step = dense_solve<4>(j, f);
    double norm = 0.0;
    for (int k = 0; k < 4; ++k) {
      u[k] -= step[k];
      norm = std::max(norm, std::abs(step[k]));
    }
    if (norm < 1e-15 * (1 + a + b + c)) break;
  }
  return u;
}

/// Classical RK4 for the spatially constant reaction system.
inline std::array<double, 4> ode_rk4(std::array<double, 4> u, double t_end, int steps) {
  auto rhs = [](const std::array<double, 4>& v) {
    const double r = v[0] * v[1] - v[2] * v[3];
    return std::array<double, 4>{-r, -r, r, r};
  };
  const double h = t_end / steps;
  for (int s = 0; s < steps; ++s) {
    const auto k1 = rhs(u);
    std::array<double, 4> t{};
    for (int i = 0; i < 4; ++i) t[i] = u[i] + 0.5 * h * k1[i];
    const auto k2 = rhs(t);
    for (int i = 0; i < 4; ++i) t[i] = u[i] + 0.5 * h * k2[i];
    const auto k3 = rhs(t);
    for (int i = 0; i < 4; ++i) t[i] = u[i] + h * k3[i];
    const auto k4 = rhs(t);
    for (int i = 0; i < 4; ++i) u[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return u;
}

}  // namespace rxd::test
