#include "rxd/discrete_ops.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace rxd {

LaplacianStencil::LaplacianStencil(GridPtr g) : grid(std::move(g)) {
  if (!grid) throw ContractError("stencil requires a grid");
  h = {grid->spacing(0), grid->spacing(1)};
}

Field laplacian_apply(const LaplacianStencil& stencil, const Field& f) {
  require_same_grid(stencil.grid, f, "laplacian_apply");
  const Grid& g = *stencil.grid;
  const int nx = g.cells(0);
  const int ny = g.cells(1);
  const double ix2 = 1.0 / (stencil.h[0] * stencil.h[0]);
  const double iy2 = 1.0 / (stencil.h[1] * stencil.h[1]);
  const bool two_d = g.dimension() == 2;

  std::vector<double> out(g.cell_count(), 0.0);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t c = g.index(i, j);
      const double fc = f[c];
      double acc = 0.0;
      if (i > 0) acc += (f[c - 1] - fc) * ix2;
      if (i + 1 < nx) acc += (f[c + 1] - fc) * ix2;
      if (two_d) {
        if (j > 0) acc += (f[c - nx] - fc) * iy2;
        if (j + 1 < ny) acc += (f[c + nx] - fc) * iy2;
      }
      out[c] = acc;
    }
  }
  return Field(stencil.grid, std::move(out));
}

double face_gradient_sq_integral(const LaplacianStencil& stencil, const Field& f) {
  require_same_grid(stencil.grid, f, "face_gradient_sq_integral");
  const Grid& g = *stencil.grid;
  const int nx = g.cells(0);
  const int ny = g.cells(1);
  double sx = 0.0;
  double sy = 0.0;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      const double jump = f[g.index(i + 1, j)] - f[g.index(i, j)];
      sx += jump * jump;
    }
  }
  if (g.dimension() == 2) {
    for (int j = 0; j + 1 < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const double jump = f[g.index(i, j + 1)] - f[g.index(i, j)];
        sy += jump * jump;
      }
    }
  }
  return g.cell_volume() * (sx / (stencil.h[0] * stencil.h[0]) + sy / (stencil.h[1] * stencil.h[1]));
}

std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (lower.size() != n || upper.size() != n || rhs.size() != n || n == 0) {
    throw ContractError("solve_tridiagonal: inconsistent sizes");
  }
  std::vector<double> c(n), d(n), x(n);
  c[0] = upper[0] / diag[0];
  d[0] = rhs[0] / diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double m = diag[i] - lower[i] * c[i - 1];
    c[i] = upper[i] / m;
    d[i] = (rhs[i] - lower[i] * d[i - 1]) / m;
  }
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

namespace {

Field solve_1d(const LaplacianStencil& stencil, const Field& f, double r_coef) {
  const std::size_t n = f.size();
  const double r = r_coef / (stencil.h[0] * stencil.h[0]);
  std::vector<double> lower(n, -r), upper(n, -r), diag(n, 1.0 + 2.0 * r);
  lower[0] = 0.0;
  upper[n - 1] = 0.0;
  diag[0] = 1.0 + r;
  diag[n - 1] = 1.0 + r;
  if (n == 1) diag[0] = 1.0;
  return Field(stencil.grid, solve_tridiagonal(lower, diag, upper, f.values()));
}

Field solve_2d_cg(const LaplacianStencil& stencil, const Field& f, double r_coef, double tolerance) {
  const Grid& g = *stencil.grid;
  const int nx = g.cells(0);
  const int ny = g.cells(1);
  const std::size_t n = g.cell_count();
  const double rx = r_coef / (stencil.h[0] * stencil.h[0]);
  const double ry = r_coef / (stencil.h[1] * stencil.h[1]);

  std::vector<double> diag(n);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int nbx = (i > 0) + (i + 1 < nx);
      const int nby = (j > 0) + (j + 1 < ny);
      diag[g.index(i, j)] = 1.0 + rx * nbx + ry * nby;
    }
  }
  auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const std::size_t c = g.index(i, j);
        double acc = diag[c] * v[c];
        if (i > 0) acc -= rx * v[c - 1];
        if (i + 1 < nx) acc -= rx * v[c + 1];
        if (j > 0) acc -= ry * v[c - nx];
        if (j + 1 < ny) acc -= ry * v[c + nx];
        out[c] = acc;
      }
    }
  };
  auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
    return s;
  };

  const std::vector<double> b(f.values().begin(), f.values().end());
  const double bnorm = std::sqrt(dot(b, b));
  std::vector<double> x = b;
  if (bnorm == 0.0) return Field(stencil.grid, std::move(x));

  std::vector<double> r(n), z(n), p(n), ap(n);
  apply(x, ap);
  for (std::size_t k = 0; k < n; ++k) r[k] = b[k] - ap[k];
  for (std::size_t k = 0; k < n; ++k) z[k] = r[k] / diag[k];
  p = z;
  double rz = dot(r, z);
  double rnorm = std::sqrt(dot(r, r));
  const std::size_t max_iter = 10 * n + 100;
  std::size_t it = 0;
  while (rnorm > tolerance * bnorm && it < max_iter) {
    apply(p, ap);
    const double alpha = rz / dot(p, ap);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] += alpha * p[k];
      r[k] -= alpha * ap[k];
    }
    for (std::size_t k = 0; k < n; ++k) z[k] = r[k] / diag[k];
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (std::size_t k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
    rnorm = std::sqrt(dot(r, r));
    ++it;
  }
  if (!(rnorm <= tolerance * bnorm)) {
    std::ostringstream os;
    os << "conjugate gradient stalled after " << it << " iterations: relative residual " << rnorm / bnorm
       << " > " << tolerance;
    throw NumericalFailure(os.str());
  }

  // The exact solution preserves the cell sum; remove the residual's share of it.
  double sb = 0.0;
  double sx = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sb += b[k];
    sx += x[k];
  }
  const double shift = (sb - sx) / static_cast<double>(n);
  for (double& v : x) v += shift;
  return Field(stencil.grid, std::move(x));
}

}  // namespace

Field implicit_diffusion_solve(const LaplacianStencil& stencil, const Field& f, double d, double dt,
                               double tolerance) {
  require_same_grid(stencil.grid, f, "implicit_diffusion_solve");
  if (!(d >= 0.0)) throw ParameterError("diffusion coefficient must be nonnegative");
  if (!(dt > 0.0)) throw ParameterError("time step must be positive");
  if (d == 0.0) return f;
  if (stencil.grid->dimension() == 1) return solve_1d(stencil, f, dt * d);
  return solve_2d_cg(stencil, f, dt * d, tolerance);
}

double neumann_eigenvalue(int n, double h, int k) {
  const double s = std::sin(std::numbers::pi * k / (2.0 * n));
  return -4.0 / (h * h) * s * s;
}

double spectral_gap(const LaplacianStencil& stencil) {
  const Grid& g = *stencil.grid;
  double gap = -neumann_eigenvalue(g.cells(0), stencil.h[0], 1);
  if (g.dimension() == 2 && g.cells(1) > 1) {
    gap = std::min(gap, -neumann_eigenvalue(g.cells(1), stencil.h[1], 1));
  }
  if (g.cells(0) == 1 && (g.dimension() == 1 || g.cells(1) == 1)) return 0.0;
  return gap;
}

namespace {

// exp(dtau * L) on n cells: K_ij = (G(|i-j|) + G(i+j+1) - 1) / n with
// G(m) = sum_k exp(dtau * lambda_k) cos(pi k m / n).
std::vector<double> axis_kernel(int n, double h, double dtau) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<double> decay(un);
  for (int k = 0; k < n; ++k) decay[k] = std::exp(dtau * neumann_eigenvalue(n, h, k));

  std::vector<double> big_g(2 * un, 0.0);
  for (int m = 0; m < 2 * n; ++m) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
      const long phase = (static_cast<long>(k) * m) % (2L * n);
      s += decay[k] * std::cos(std::numbers::pi * static_cast<double>(phase) / n);
    }
    big_g[m] = s;
  }

  std::vector<double> kernel(un * un);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = (big_g[std::abs(i - j)] + big_g[i + j + 1] - decay[0]) / n;
      kernel[i * un + j] = v > 0.0 ? v : 0.0;
    }
  }
  // Unit column sums (conservation), with the leftover folded into the diagonal.
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += kernel[i * un + j];
    for (int i = 0; i < n; ++i) kernel[i * un + j] /= s;
    double sum = 0.0;
    double comp = 0.0;
    for (int i = 0; i < n; ++i) {
      const double y = kernel[i * un + j] - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    kernel[j * un + j] += (1.0 - sum) + comp;
  }
  return kernel;
}

}  // namespace

HeatPropagator::HeatPropagator(const LaplacianStencil& stencil, double diffusivity_time)
    : grid_(stencil.grid), dtau_(diffusivity_time) {
  if (!(dtau_ >= 0.0)) throw ParameterError("heat propagator requires d * tau >= 0");
  kernels_[0] = axis_kernel(grid_->cells(0), stencil.h[0], dtau_);
  if (grid_->dimension() == 2) kernels_[1] = axis_kernel(grid_->cells(1), stencil.h[1], dtau_);
}

Field HeatPropagator::apply(const Field& f) const {
  require_same_grid(grid_, f, "HeatPropagator::apply");
  if (dtau_ == 0.0) return f;
  const auto nx = static_cast<std::size_t>(grid_->cells(0));
  const auto ny = static_cast<std::size_t>(grid_->cells(1));
  const auto& kx = kernels_[0];

  std::vector<double> tmp(nx * ny, 0.0);
  for (std::size_t j = 0; j < ny; ++j) {
    const double* row = &f.values()[j * nx];
    for (std::size_t i = 0; i < nx; ++i) {
      const double* k = &kx[i * nx];
      double s = 0.0;
      for (std::size_t m = 0; m < nx; ++m) s += k[m] * row[m];
      tmp[j * nx + i] = s;
    }
  }
  if (grid_->dimension() == 1) return Field(grid_, std::move(tmp));

  const auto& ky = kernels_[1];
  std::vector<double> out(nx * ny, 0.0);
  for (std::size_t j = 0; j < ny; ++j) {
    double* dst = &out[j * nx];
    for (std::size_t m = 0; m < ny; ++m) {
      const double w = ky[j * ny + m];
      if (w == 0.0) continue;
      const double* src = &tmp[m * nx];
      for (std::size_t i = 0; i < nx; ++i) dst[i] += w * src[i];
    }
  }
  return Field(grid_, std::move(out));
}

}  // namespace rxd
