#include <cmath>
#include <random>

#include "doctest.h"
#include "rxd/equilibrium.hpp"
#include "unit/test_support.hpp"

using namespace rxd;

TEST_CASE("closed-form equilibrium examples") {
  SUBCASE("symmetric masses") {
    const auto eq = compute_equilibrium(Masses::from_independent(2, 2, 2), 1.0);
    for (double v : eq.u) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("(1, 2, 3) on unit volume") {
    const auto eq = compute_equilibrium(Masses::from_independent(1, 2, 3), 1.0);
    CHECK(eq[0] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(eq[1] == doctest::Approx(2.4).epsilon(1e-15));
    CHECK(eq[2] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(eq[3] == doctest::Approx(1.6).epsilon(1e-15));
    CHECK(eq[0] * eq[1] == doctest::Approx(0.96).epsilon(1e-15));
    CHECK(eq[2] * eq[3] == doctest::Approx(0.96).epsilon(1e-15));
    const auto newton = test::newton_equilibrium(1, 2, 3);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(newton[k] - eq[k]) < 1e-13);
  }
  SUBCASE("volume two") {
    const auto eq = compute_equilibrium(Masses::from_independent(2, 2, 2), 2.0);
    for (double v : eq.u) CHECK(v == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("equilibrium errors") {
  CHECK_THROWS_AS(compute_equilibrium(Masses::from_independent(3, 1, 1), 1.0), NoEquilibriumError);
  CHECK_THROWS_AS(compute_equilibrium(Masses::from_independent(2, 1, 1), 1.0), NoEquilibriumError);
  CHECK_THROWS_AS(compute_equilibrium(Masses::from_independent(-1, 1, 1), 1.0), ParameterError);
  CHECK_THROWS_AS(compute_equilibrium(Masses::from_independent(1, 0, 1), 1.0), ParameterError);
  CHECK_THROWS_AS(compute_equilibrium(Masses::from_independent(1, 1, 1), 0.0), ParameterError);
}

TEST_CASE("equilibrium residuals") {
  {
    const auto r = equilibrium_residual(compute_equilibrium(Masses::from_independent(2, 2, 2), 1.0));
    for (double v : r) CHECK(std::abs(v) <= 1e-15);
  }
  {
    Equilibrium hand{{1, 1, 1, 2}, Masses::from_independent(2, 2, 2), 1.0};
    const auto r = equilibrium_residual(hand);
    CHECK(r[0] == doctest::Approx(-1.0));
    CHECK(r[1] == doctest::Approx(0.0));
    CHECK(r[2] == doctest::Approx(-1.0));
    CHECK(r[3] == doctest::Approx(0.0));
  }
  {
    const auto r = equilibrium_residual(compute_equilibrium(Masses::from_independent(1, 2, 3), 1.0));
    for (double v : r) CHECK(std::abs(v) <= 1e-14);
  }
}

TEST_CASE("random mass triples: residuals, Newton agreement, scaling, positivity") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> mass(0.01, 10.0);
  std::uniform_real_distribution<double> vol(0.1, 5.0);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  int tested = 0;
  double worst = 0.0;
  while (tested < 1000) {
    const Masses m = Masses::from_independent(mass(rng), mass(rng), mass(rng));
    if (!(m.m24 > 0.0)) continue;
    ++tested;
    const double v = vol(rng);
    const auto eq = compute_equilibrium(m, v);
    for (double x : eq.u) REQUIRE(x > 0.0);
    for (double r : equilibrium_residual(eq)) worst = std::max(worst, std::abs(r) / (1.0 + m.scale() / v));

    const auto newton = test::newton_equilibrium(m.m13 / v, m.m14 / v, m.m23 / v);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(newton[k] - eq[k]) <= 1e-10 * (1.0 + eq[k]));

    const double k = scale(rng);
    const Masses mk{k * m.m13, k * m.m14, k * m.m23, k * m.m24};
    const auto eqk = compute_equilibrium(mk, k * v);
    for (int s = 0; s < 4; ++s) CHECK(std::abs(eqk[s] - eq[s]) <= 1e-13 * eq[s]);
  }
  CHECK(worst <= 1e-12);
}
