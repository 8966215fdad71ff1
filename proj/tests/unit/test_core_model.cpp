#include <cmath>
#include <random>

#include "doctest.h"
#include "rxd/core_model.hpp"
#include "unit/test_support.hpp"

using namespace rxd;

TEST_CASE("grid cell volume tiles the domain") {
  auto g1 = make_grid_1d(3.0, 7);
  CHECK(g1->cell_volume() * g1->cell_count() == doctest::Approx(3.0).epsilon(1e-15));
  auto g2 = make_grid_2d(2.0, 0.5, 13, 9);
  CHECK(g2->cell_volume() * g2->cell_count() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g2->dimension() == 2);
  CHECK_THROWS_AS(make_grid_1d(-1.0, 4), ParameterError);
  CHECK_THROWS_AS(make_grid_1d(1.0, 0), ParameterError);
  CHECK_THROWS_AS(make_grid(DomainSpec{3, {1.0, 1.0}, "cube"}, {2, 2}), ParameterError);
}

TEST_CASE("integrate") {
  SUBCASE("constant field") {
    auto g = make_grid_1d(1.0, 10);
    CHECK(integrate(Field(g, 3.0)) == doctest::Approx(3.0).epsilon(1e-15));
  }
  SUBCASE("zero field in 2D") {
    for (int n : {3, 8, 21}) {
      auto g = make_grid_2d(2.0, 1.0, n, n + 1);
      CHECK(integrate(Field(g, 0.0)) == 0.0);
    }
  }
  SUBCASE("cell averages of x are integrated exactly") {
    auto g = make_grid_1d(1.0, 128);
    std::vector<double> v(128);
    for (int i = 0; i < 128; ++i) {
      // Symbolic cell average of x over [a, b]: (b^2 - a^2) / (2 (b - a)).
      const double a = i / 128.0;
      const double b = (i + 1) / 128.0;
      v[i] = (b * b - a * a) / (2.0 * (b - a));
    }
    CHECK(std::abs(integrate(Field(g, v)) - 0.5) < 1e-15);
  }
  SUBCASE("grid mismatch is a contract violation") {
    auto g = make_grid_1d(1.0, 10);
    auto other = make_grid_1d(1.0, 11);
    CHECK_THROWS_AS(integrate(*g, Field(other, 1.0)), ContractError);
  }
  SUBCASE("linearity") {
    std::mt19937_64 rng(7);
    auto g = make_grid_2d(1.5, 0.7, 17, 11);
    for (int trial = 0; trial < 50; ++trial) {
      const Field f = test::random_field(g, rng);
      const Field h = test::random_field(g, rng);
      std::uniform_real_distribution<double> coef(-3.0, 3.0);
      const double a = coef(rng);
      const double b = coef(rng);
      std::vector<double> combo(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) combo[i] = a * f[i] + b * h[i];
      const double lhs = integrate(Field(g, combo));
      const double rhs = a * integrate(f) + b * integrate(h);
      CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(a * integrate(f)) + std::abs(b * integrate(h))));
    }
  }
}

TEST_CASE("masses_of") {
  auto unit = make_grid_1d(1.0, 5);
  {
    const Masses m = masses_of(State::constant(unit, {1, 1, 1, 1}));
    CHECK(m.m13 == doctest::Approx(2.0));
    CHECK(m.m14 == doctest::Approx(2.0));
    CHECK(m.m23 == doctest::Approx(2.0));
    CHECK(m.m24 == doctest::Approx(2.0));
  }
  {
    const Masses m = masses_of(State::constant(unit, {2, 1, 1, 1}));
    CHECK(m.m13 == doctest::Approx(3.0));
    CHECK(m.m14 == doctest::Approx(3.0));
    CHECK(m.m23 == doctest::Approx(2.0));
    CHECK(m.m24 == doctest::Approx(2.0));
  }
  {
    auto two = make_grid_2d(2.0, 1.0, 4, 3);
    const Masses m = masses_of(State::constant(two, {1, 2, 3, 4}));
    CHECK(m.m13 == doctest::Approx(8.0));
    CHECK(m.m14 == doctest::Approx(10.0));
    CHECK(m.m23 == doctest::Approx(10.0));
    CHECK(m.m24 == doctest::Approx(12.0));
  }
  SUBCASE("fourth law is the dependent one") {
    std::mt19937_64 rng(11);
    auto g = make_grid_1d(2.5, 33);
    for (int trial = 0; trial < 100; ++trial) {
      const State s = test::random_positive_state(g, rng, 0.0, 5.0);
      const Masses m = masses_of(s);
      const double direct = integrate(s[1]) + integrate(s[3]);
      CHECK(std::abs(m.m24 - (m.m14 + m.m23 - m.m13)) <= 1e-13 * m.scale());
      CHECK(std::abs(m.m24 - direct) <= 1e-13 * m.scale());
    }
  }
}

TEST_CASE("state invariants") {
  auto g = make_grid_1d(1.0, 4);
  auto other = make_grid_1d(1.0, 5);
  CHECK_THROWS_AS(State({Field(g, 1.0), Field(g, 1.0), Field(g, 1.0), Field(other, 1.0)}), ContractError);
  CHECK_THROWS_AS(State({Field(g, 1.0), Field(g, -1e-3), Field(g, 1.0), Field(g, 1.0)}), ContractError);
  CHECK_THROWS_AS(Field(g, std::vector<double>(3, 0.0)), ContractError);
  // Equal-valued grids built separately are the same mesh.
  CHECK_NOTHROW(State({Field(g, 1.0), Field(make_grid_1d(1.0, 4), 1.0), Field(g, 1.0), Field(g, 1.0)}));
}

TEST_CASE("lp norms") {
  auto unit = make_grid_1d(1.0, 8);
  for (double p : {1.0, 1.5, 2.0, 3.7}) {
    CHECK(lp_norm(Field(unit, -2.5), p) == doctest::Approx(2.5).epsilon(1e-14));
  }
  CHECK(lp_norm(Field(unit, 2.5), INFINITY) == 2.5);

  auto four = make_grid_2d(2.0, 2.0, 3, 5);
  CHECK(lp_norm(Field(four, 2.0), 2.0) == doctest::Approx(4.0).epsilon(1e-14));

  auto two_cells = make_grid_1d(1.0, 2);
  CHECK(linf_norm(Field(two_cells, std::vector<double>{3.0, -1.0})) == 3.0);
  CHECK(lp_norm(Field(two_cells, std::vector<double>{3.0, -1.0}), INFINITY) == 3.0);

  CHECK_THROWS_AS(lp_norm(Field(unit, 1.0), 0.5), ParameterError);

  SUBCASE("homogeneous and monotone") {
    std::mt19937_64 rng(3);
    auto g = make_grid_2d(1.0, 1.0, 9, 9);
    for (int trial = 0; trial < 40; ++trial) {
      const Field f = test::random_field(g, rng);
      std::vector<double> scaled(f.size()), bigger(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        scaled[i] = -3.0 * f[i];
        bigger[i] = f[i] + (f[i] >= 0 ? 0.1 : -0.1);
      }
      for (double p : {1.0, 2.0, 4.5}) {
        CHECK(lp_norm(Field(g, scaled), p) == doctest::Approx(3.0 * lp_norm(f, p)).epsilon(1e-13));
        CHECK(lp_norm(Field(g, bigger), p) >= lp_norm(f, p));
      }
    }
  }
}
