#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rxd/errors.hpp"

namespace rxd {

inline constexpr int kSpecies = 4;

/// Bounded 1D interval [0, Lx] or 2D rectangle [0, Lx] x [0, Ly].
struct DomainSpec {
  int dimension = 1;
  std::array<double, 2> lengths{1.0, 1.0};
  std::string label;

  static DomainSpec interval(double length, std::string label = "interval");
  static DomainSpec rectangle(double lx, double ly, std::string label = "rectangle");

  /// |Omega|.
  double volume() const;
  /// Throws ParameterError when dimension or a length is invalid.
  void validate() const;
};

/// Uniform cell-centered mesh. For 1D grids cells(1) == 1 and the second
/// axis is inert.
class Grid {
 public:
  Grid(DomainSpec domain, std::array<int, 2> cells);

  const DomainSpec& domain() const { return domain_; }
  int dimension() const { return domain_.dimension; }
  int cells(int axis) const { return cells_[axis]; }
  std::size_t cell_count() const { return count_; }
  double spacing(int axis) const { return spacing_[axis]; }
  double cell_volume() const { return cell_volume_; }
  double volume() const { return domain_.volume(); }
  /// Coordinate of the cell center along an axis.
  double center(int axis, int index) const { return (index + 0.5) * spacing_[axis]; }
  /// Flat index of cell (i, j); i runs fastest.
  std::size_t index(int i, int j = 0) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(cells_[0]) +
           static_cast<std::size_t>(i);
  }

  bool operator==(const Grid& other) const;

 private:
  DomainSpec domain_;
  std::array<int, 2> cells_;
  std::array<double, 2> spacing_;
  std::size_t count_;
  double cell_volume_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid_1d(double length, int cells);
GridPtr make_grid_2d(double lx, double ly, int nx, int ny);
GridPtr make_grid(const DomainSpec& domain, std::array<int, 2> cells);

/// True when both pointers denote the same mesh (identity or equal values).
bool same_grid(const GridPtr& a, const GridPtr& b);

/// Cell-averaged real values on a grid. Signed values are allowed.
class Field {
 public:
  Field(GridPtr grid, std::vector<double> values);
  Field(GridPtr grid, double constant);

  /// Samples f at the cell centers.
  static Field from_function(GridPtr grid, const std::function<double(double, double)>& f);

  const GridPtr& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  double min() const;
  double max() const;
  bool all_finite() const;

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

/// Throws ContractError unless f lives on grid.
void require_same_grid(const GridPtr& grid, const Field& f, const char* where);

struct DiffusionCoeffs {
  double d1 = 1.0;
  double d2 = 1.0;
  double d3 = 1.0;
  double d4 = 0.0;  // 0 selects the degenerate system

  double operator[](int species) const;
  bool degenerate() const { return d4 == 0.0; }
  void validate() const;
};

/// The conserved integrals M_ij = int(u_i + u_j). Only three are
/// independent; m24 is always m14 + m23 - m13.
struct Masses {
  double m13 = 0.0;
  double m14 = 0.0;
  double m23 = 0.0;
  double m24 = 0.0;

  static Masses from_independent(double m13, double m14, double m23);
  /// Largest of the four masses, used as the scale for relative errors.
  double scale() const;
  /// Throws ParameterError / NoEquilibriumError when no positive equilibrium exists.
  void validate_positive() const;
};

/// (u1, u2, u3, u4) on one shared grid at a given time. Every value >= 0.
class State {
 public:
  State(std::array<Field, kSpecies> u, double time = 0.0);
  /// Four constant fields.
  static State constant(GridPtr grid, std::array<double, kSpecies> values, double time = 0.0);

  const Field& operator[](int species) const { return u_[species]; }
  const std::array<Field, kSpecies>& fields() const { return u_; }
  const GridPtr& grid() const { return u_[0].grid(); }
  double time() const { return time_; }

  /// Smallest cell value over all species.
  double min_value() const;

 private:
  std::array<Field, kSpecies> u_;
  double time_;
};

/// Midpoint quadrature: cell_volume * sum(values).
double integrate(const Grid& grid, const Field& f);
double integrate(const Field& f);

Masses masses_of(const State& state);

double linf_norm(const Field& f);
/// (cell_volume * sum |v|^p)^(1/p); p = +inf gives the max norm.
double lp_norm(const Field& f, double p);

}  // namespace rxd
