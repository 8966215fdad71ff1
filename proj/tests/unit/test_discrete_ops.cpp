#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "rxd/discrete_ops.hpp"
#include "unit/test_support.hpp"

using namespace rxd;
using std::numbers::pi;

namespace {

using Matrix = std::vector<std::vector<double>>;

// Dense matrix of the stencil, assembled by applying it to unit vectors.
Matrix dense_laplacian(const LaplacianStencil& st) {
  const std::size_t n = st.grid->cell_count();
  Matrix m(n, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    const Field col = laplacian_apply(st, Field(st.grid, e));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// exp(A) by scaling and squaring with a 20-term Taylor series.
Matrix dense_expm(Matrix a) {
  const std::size_t n = a.size();
  double norm = 0.0;
  for (const auto& row : a) {
    double s = 0.0;
    for (double v : row) s += std::abs(v);
    norm = std::max(norm, s);
  }
  int squarings = 0;
  while (norm > 0.25) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  for (auto& row : a)
    for (double& v : row) v *= scale;
  Matrix result(n, std::vector<double>(n, 0.0)), term(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = term[i][i] = 1.0;
  for (int k = 1; k <= 20; ++k) {
    term = matmul(term, a);
    for (auto& row : term)
      for (double& v : row) v /= k;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result);
  return result;
}

// Dense Gaussian elimination for (I - c L) v = f.
std::vector<double> dense_implicit(const Matrix& lap, double c, std::vector<double> f) {
  const std::size_t n = f.size();
  Matrix a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? 1.0 : 0.0) - c * lap[i][j];
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= m * a[k][j];
      f[i] -= m * f[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = f[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return x;
}

Field cosine_mode(const GridPtr& g) {
  return Field::from_function(g, [](double x, double) { return std::cos(pi * x); });
}

// Rayleigh quotient of the cosine mode: the discrete eigenvalue it carries.
double discrete_eigenvalue_of(const LaplacianStencil& st, const Field& f) {
  return test::weighted_dot(laplacian_apply(st, f), f) / test::weighted_dot(f, f);
}

}  // namespace

TEST_CASE("laplacian annihilates constants") {
  for (auto g : {make_grid_1d(1.0, 17), make_grid_2d(2.0, 1.0, 8, 5)}) {
    const Field out = laplacian_apply(LaplacianStencil(g), Field(g, 4.2));
    for (double v : out.values()) CHECK(std::abs(v) < 1e-12);
  }
}

TEST_CASE("cosine mode is the first nonconstant Neumann eigenfunction") {
  double prev_err = 0.0;
  for (int n : {32, 64, 128}) {
    auto g = make_grid_1d(1.0, n);
    const LaplacianStencil st(g);
    const Field f = cosine_mode(g);
    const Field lf = laplacian_apply(st, f);
    const double lambda_h = discrete_eigenvalue_of(st, f);
    // Pointwise eigen-relation.
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(lf[i] - lambda_h * f[i]) < 1e-9);
    CHECK(lambda_h == doctest::Approx(neumann_eigenvalue(n, 1.0 / n, 1)).epsilon(1e-12));
    const double err = std::abs(lambda_h / (-pi * pi) - 1.0);
    if (n == 64) CHECK(err <= 1e-3);
    if (prev_err > 0.0) CHECK(prev_err / err == doctest::Approx(4.0).epsilon(0.01));
    prev_err = err;
  }
}

TEST_CASE("laplacian telescopes: zero total flux") {
  std::mt19937_64 rng(5);
  for (auto g : {make_grid_1d(1.3, 41), make_grid_2d(1.0, 2.0, 12, 7)}) {
    const LaplacianStencil st(g);
    for (int trial = 0; trial < 50; ++trial) {
      const Field f = test::random_field(g, rng);
      const double total = integrate(laplacian_apply(st, f));
      CHECK(std::abs(total) <= 1e-13 * std::max(1.0, linf_norm(laplacian_apply(st, f))));
    }
  }
}

TEST_CASE("face gradient integral") {
  SUBCASE("constant") {
    auto g = make_grid_2d(1.0, 1.0, 6, 6);
    CHECK(face_gradient_sq_integral(LaplacianStencil(g), Field(g, 2.0)) == 0.0);
  }
  SUBCASE("two cells by hand") {
    auto g = make_grid_1d(1.0, 2);
    CHECK(face_gradient_sq_integral(LaplacianStencil(g), Field(g, std::vector<double>{0.0, 1.0})) ==
          doctest::Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("cosine converges to pi^2 / 2 at second order") {
    const double exact = pi * pi / 2.0;
    double prev = 0.0;
    for (int n : {64, 128, 256}) {
      auto g = make_grid_1d(1.0, n);
      const double val = face_gradient_sq_integral(LaplacianStencil(g), cosine_mode(g));
      const double err = std::abs(val - exact);
      if (n == 256) CHECK(err / exact <= 0.01);
      if (prev > 0.0) CHECK(prev / err == doctest::Approx(4.0).epsilon(0.02));
      prev = err;
    }
  }
}

TEST_CASE("discrete integration by parts and symmetry") {
  std::mt19937_64 rng(9);
  for (auto g : {make_grid_1d(2.0, 37), make_grid_2d(1.0, 0.5, 10, 13)}) {
    const LaplacianStencil st(g);
    for (int trial = 0; trial < 100; ++trial) {
      const Field f = test::random_field(g, rng);
      const Field h = test::random_field(g, rng);
      const double a = test::weighted_dot(laplacian_apply(st, f), h);
      const double b = test::weighted_dot(f, laplacian_apply(st, h));
      CHECK(std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}));
      const double lff = test::weighted_dot(laplacian_apply(st, f), f);
      const double grad = face_gradient_sq_integral(st, f);
      CHECK(grad >= 0.0);
      CHECK(std::abs(lff + grad) <= 1e-12 * std::max(1.0, grad));
    }
  }
}

TEST_CASE("discrete Poincare-Wirtinger with the spectral gap") {
  std::mt19937_64 rng(13);
  for (auto g : {make_grid_1d(1.0, 50), make_grid_2d(2.0, 1.0, 12, 8)}) {
    const LaplacianStencil st(g);
    const double gap = spectral_gap(st);
    CHECK(gap > 0.0);
    for (int trial = 0; trial < 200; ++trial) {
      Field f = test::random_field(g, rng);
      const double mean = integrate(f) / g->volume();
      for (double& v : f.values()) v -= mean;
      const double l2sq = test::weighted_dot(f, f);
      CHECK(face_gradient_sq_integral(st, f) >= gap * l2sq * (1.0 - 1e-12));
    }
  }
  // Gap tends to (pi / L)^2 under refinement.
  const double length = 2.0;
  double prev = 0.0;
  for (int n : {40, 80, 160}) {
    const double gap = spectral_gap(LaplacianStencil(make_grid_1d(length, n)));
    const double err = std::abs(gap - (pi / length) * (pi / length));
    if (prev > 0.0) CHECK(prev / err == doctest::Approx(4.0).epsilon(0.01));
    prev = err;
  }
}

TEST_CASE("implicit diffusion solve") {
  SUBCASE("constants are invariant") {
    for (auto g : {make_grid_1d(1.0, 20), make_grid_2d(1.0, 1.0, 9, 7)}) {
      const Field out = implicit_diffusion_solve(LaplacianStencil(g), Field(g, 1.7), 3.0, 0.4);
      for (double v : out.values()) CHECK(v == doctest::Approx(1.7).epsilon(1e-13));
    }
  }
  SUBCASE("zero diffusion returns the input exactly") {
    std::mt19937_64 rng(1);
    auto g = make_grid_1d(1.0, 12);
    const Field f = test::random_field(g, rng);
    const Field out = implicit_diffusion_solve(LaplacianStencil(g), f, 0.0, 0.1);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(out[i] == f[i]);
  }
  SUBCASE("cosine mode is damped by 1 / (1 + dt d lambda)") {
    auto g = make_grid_1d(1.0, 128);
    const LaplacianStencil st(g);
    const Field f = cosine_mode(g);
    const double lambda = -discrete_eigenvalue_of(st, f);
    const double d = 0.7;
    const double dt = 0.05;
    const Field v = implicit_diffusion_solve(st, f, d, dt);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(v[i] - f[i] / (1.0 + dt * d * lambda)) < 1e-12);
  }
  SUBCASE("agrees with a dense eigen-free oracle in 1D and 2D") {
    std::mt19937_64 rng(77);
    for (auto g : {make_grid_1d(1.0, 9), make_grid_2d(1.0, 0.8, 5, 4)}) {
      const LaplacianStencil st(g);
      const auto lap = dense_laplacian(st);
      const Field f = test::random_field(g, rng, 0.0, 1.0);
      const Field v = implicit_diffusion_solve(st, f, 1.3, 0.02);
      const auto ref = dense_implicit(lap, 1.3 * 0.02, std::vector<double>(f.values().begin(), f.values().end()));
      for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(v[i] - ref[i]) < 1e-11);
    }
  }
  SUBCASE("conservation and discrete maximum principle on random inputs") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> coef(0.01, 5.0);
    for (auto g : {make_grid_1d(1.0, 64), make_grid_2d(1.0, 1.0, 12, 10)}) {
      const LaplacianStencil st(g);
      for (int trial = 0; trial < 500; ++trial) {
        const Field f = test::random_field(g, rng, 0.0, 3.0);
        const Field v = implicit_diffusion_solve(st, f, coef(rng), coef(rng) * 0.1);
        const double before = integrate(f);
        CHECK(std::abs(integrate(v) - before) <= 1e-12 * std::abs(before));
        CHECK(v.min() >= f.min() - 1e-12);
        CHECK(v.max() <= f.max() + 1e-12);
      }
    }
  }
  SUBCASE("parameter errors") {
    auto g = make_grid_1d(1.0, 4);
    CHECK_THROWS_AS(implicit_diffusion_solve(LaplacianStencil(g), Field(g, 1.0), -1.0, 0.1), ParameterError);
    CHECK_THROWS_AS(implicit_diffusion_solve(LaplacianStencil(g), Field(g, 1.0), 1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(implicit_diffusion_solve(LaplacianStencil(g), Field(make_grid_1d(1.0, 5), 1.0), 1.0, 0.1),
                    ContractError);
  }
}

TEST_CASE("heat propagator") {
  SUBCASE("matches a dense matrix exponential") {
    std::mt19937_64 rng(4);
    for (auto g : {make_grid_1d(1.0, 8), make_grid_2d(1.0, 2.0, 4, 5)}) {
      const LaplacianStencil st(g);
      auto lap = dense_laplacian(st);
      const double dtau = 0.013;
      for (auto& row : lap)
        for (double& v : row) v *= dtau;
      const auto e = dense_expm(lap);
      const HeatPropagator prop(st, dtau);
      const Field f = test::random_field(g, rng, 0.0, 2.0);
      const Field out = prop.apply(f);
      for (std::size_t i = 0; i < f.size(); ++i) {
        double ref = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) ref += e[i][j] * f[j];
        CHECK(std::abs(out[i] - ref) < 1e-12);
      }
    }
  }
  SUBCASE("cosine mode decays by exp(lambda_h d tau)") {
    auto g = make_grid_1d(1.0, 256);
    const LaplacianStencil st(g);
    const Field f = cosine_mode(g);
    const double lambda = discrete_eigenvalue_of(st, f);
    const Field out = HeatPropagator(st, 0.01).apply(f);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(out[i] - std::exp(0.01 * lambda) * f[i]) < 1e-12);
  }
  SUBCASE("positive, conservative, maximum principle") {
    std::mt19937_64 rng(8);
    for (auto g : {make_grid_1d(1.0, 100), make_grid_2d(1.0, 1.0, 16, 12)}) {
      const LaplacianStencil st(g);
      for (double dtau : {1e-6, 1e-3, 0.1, 10.0}) {
        const HeatPropagator prop(st, dtau);
        for (double k : prop.kernel(0)) CHECK(k >= 0.0);
        // Sparse nonnegative data, zeros included.
        std::vector<double> v(g->cell_count(), 0.0);
        v[rng() % v.size()] = 1.0;
        v[rng() % v.size()] = 5.0;
        const Field f(g, v);
        const Field out = prop.apply(f);
        CHECK(out.min() >= 0.0);
        CHECK(out.max() <= f.max() * (1 + 1e-13));
        CHECK(std::abs(integrate(out) - integrate(f)) <= 1e-14 * integrate(f));
      }
    }
  }
}
