#pragma once

#include <array>
#include <span>
#include <vector>

#include "rxd/core_model.hpp"

namespace rxd {

/// Conservative second-order finite-volume Laplacian with zero-flux faces on
/// the boundary. Interior face flux is (difference of adjacent cells) / h.
struct LaplacianStencil {
  GridPtr grid;
  std::array<double, 2> h{1.0, 1.0};

  explicit LaplacianStencil(GridPtr g);
};

Field laplacian_apply(const LaplacianStencil& stencil, const Field& f);

/// sum over interior faces of cell_volume * (jump / h)^2, i.e. the integral of
/// |grad f|^2 for the face-difference representation. Boundary faces add 0.
double face_gradient_sq_integral(const LaplacianStencil& stencil, const Field& f);

/// Solves (I - dt d L) v = f by Thomas elimination (1D) or Jacobi
/// preconditioned conjugate gradients (2D). d == 0 returns f unchanged.
/// Throws NumericalFailure when CG misses the relative tolerance.
Field implicit_diffusion_solve(const LaplacianStencil& stencil, const Field& f, double d, double dt,
                               double tolerance = 1e-12);

/// Thomas algorithm for a tridiagonal system. lower[0] and upper[n-1] are ignored.
std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs);

/// k-th eigenvalue (k = 0..n-1, all <= 0) of the 1D Neumann stencil with n cells of width h.
double neumann_eigenvalue(int n, double h, int k);

/// Smallest nonzero magnitude among the eigenvalues of the stencil.
double spectral_gap(const LaplacianStencil& stencil);

/// Exact discrete heat semigroup exp(diffusivity_time * L) for the Neumann
/// stencil, assembled per axis from the cosine eigenbasis. Kernel entries are
/// kept nonnegative with unit column sums, so the propagator is positive,
/// conservative and obeys the discrete maximum principle.
class HeatPropagator {
 public:
  /// diffusivity_time is d * tau (>= 0).
  HeatPropagator(const LaplacianStencil& stencil, double diffusivity_time);

  Field apply(const Field& f) const;
  double diffusivity_time() const { return dtau_; }

  /// Dense n x n kernel along one axis (row-major).
  const std::vector<double>& kernel(int axis) const { return kernels_[axis]; }

 private:
  GridPtr grid_;
  double dtau_;
  std::array<std::vector<double>, 2> kernels_;
};

}  // namespace rxd
