#include "rxd/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rxd {

DomainSpec DomainSpec::interval(double length, std::string label) {
  DomainSpec d{1, {length, 1.0}, std::move(label)};
  d.validate();
  return d;
}

DomainSpec DomainSpec::rectangle(double lx, double ly, std::string label) {
  DomainSpec d{2, {lx, ly}, std::move(label)};
  d.validate();
  return d;
}

double DomainSpec::volume() const {
  return dimension == 1 ? lengths[0] : lengths[0] * lengths[1];
}

void DomainSpec::validate() const {
  if (dimension != 1 && dimension != 2) {
    throw ParameterError("domain dimension must be 1 or 2");
  }
  for (int a = 0; a < dimension; ++a) {
    if (!(lengths[a] > 0.0) || !std::isfinite(lengths[a])) {
      throw ParameterError("domain lengths must be positive");
    }
  }
}

Grid::Grid(DomainSpec domain, std::array<int, 2> cells) : domain_(std::move(domain)), cells_(cells) {
  domain_.validate();
  if (domain_.dimension == 1) {
    cells_[1] = 1;
    domain_.lengths[1] = 1.0;
  }
  for (int a = 0; a < domain_.dimension; ++a) {
    if (cells_[a] < 1) throw ParameterError("cells per axis must be positive");
  }
  spacing_ = {domain_.lengths[0] / cells_[0], domain_.lengths[1] / cells_[1]};
  count_ = static_cast<std::size_t>(cells_[0]) * static_cast<std::size_t>(cells_[1]);
  cell_volume_ = domain_.dimension == 1 ? spacing_[0] : spacing_[0] * spacing_[1];
}

bool Grid::operator==(const Grid& other) const {
  return domain_.dimension == other.domain_.dimension && domain_.lengths == other.domain_.lengths &&
         cells_ == other.cells_;
}

GridPtr make_grid(const DomainSpec& domain, std::array<int, 2> cells) {
  return std::make_shared<const Grid>(domain, cells);
}

GridPtr make_grid_1d(double length, int cells) {
  return make_grid(DomainSpec::interval(length), {cells, 1});
}

GridPtr make_grid_2d(double lx, double ly, int nx, int ny) {
  return make_grid(DomainSpec::rectangle(lx, ly), {nx, ny});
}

bool same_grid(const GridPtr& a, const GridPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Field::Field(GridPtr grid, std::vector<double> values) : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw ContractError("field requires a grid");
  if (values_.size() != grid_->cell_count()) {
    std::ostringstream os;
    os << "field has " << values_.size() << " values but grid has " << grid_->cell_count() << " cells";
    throw ContractError(os.str());
  }
}

Field::Field(GridPtr grid, double constant)
    : Field(grid, std::vector<double>(grid ? grid->cell_count() : 0, constant)) {}

Field Field::from_function(GridPtr grid, const std::function<double(double, double)>& f) {
  std::vector<double> v(grid->cell_count());
  for (int j = 0; j < grid->cells(1); ++j) {
    const double y = grid->dimension() == 2 ? grid->center(1, j) : 0.0;
    for (int i = 0; i < grid->cells(0); ++i) {
      v[grid->index(i, j)] = f(grid->center(0, i), y);
    }
  }
  return Field(std::move(grid), std::move(v));
}

double Field::min() const { return *std::min_element(values_.begin(), values_.end()); }
double Field::max() const { return *std::max_element(values_.begin(), values_.end()); }

bool Field::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

void require_same_grid(const GridPtr& grid, const Field& f, const char* where) {
  if (!same_grid(grid, f.grid())) {
    throw ContractError(std::string(where) + ": field is defined on a different grid");
  }
}

double DiffusionCoeffs::operator[](int species) const {
  switch (species) {
    case 0: return d1;
    case 1: return d2;
    case 2: return d3;
    case 3: return d4;
    default: throw ContractError("species index out of range");
  }
}

void DiffusionCoeffs::validate() const {
  if (!(d1 > 0.0)) throw ParameterError("diffusion.d1 must be positive");
  if (!(d2 > 0.0)) throw ParameterError("diffusion.d2 must be positive");
  if (!(d3 > 0.0)) throw ParameterError("diffusion.d3 must be positive");
  if (!(d4 >= 0.0)) throw ParameterError("diffusion.d4 must be nonnegative");
}

Masses Masses::from_independent(double m13, double m14, double m23) {
  return Masses{m13, m14, m23, m14 + m23 - m13};
}

double Masses::scale() const {
  return std::max({std::abs(m13), std::abs(m14), std::abs(m23), std::abs(m24)});
}

void Masses::validate_positive() const {
  if (!(m13 > 0.0) || !(m14 > 0.0) || !(m23 > 0.0)) {
    throw ParameterError("masses m13, m14, m23 must be positive");
  }
  if (!(m14 + m23 - m13 > 0.0)) {
    throw NoEquilibriumError("no positive equilibrium: m24 = m14 + m23 - m13 must be positive");
  }
}

State::State(std::array<Field, kSpecies> u, double time) : u_(std::move(u)), time_(time) {
  for (int s = 1; s < kSpecies; ++s) {
    if (!same_grid(u_[0].grid(), u_[s].grid())) {
      throw ContractError("state species must share one grid");
    }
  }
  if (!(time_ >= 0.0)) throw ContractError("state time must be nonnegative");
  for (const auto& f : u_) {
    for (double v : f.values()) {
      if (!(v >= 0.0)) throw ContractError("state values must be nonnegative");
    }
  }
}

State State::constant(GridPtr grid, std::array<double, kSpecies> values, double time) {
  return State({Field(grid, values[0]), Field(grid, values[1]), Field(grid, values[2]), Field(grid, values[3])},
               time);
}

double State::min_value() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& f : u_) m = std::min(m, f.min());
  return m;
}

double integrate(const Grid& grid, const Field& f) {
  if (!(grid == *f.grid())) throw ContractError("integrate: field is defined on a different grid");
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  return grid.cell_volume() * sum;
}

double integrate(const Field& f) { return integrate(*f.grid(), f); }

Masses masses_of(const State& state) {
  const double i1 = integrate(state[0]);
  const double i2 = integrate(state[1]);
  const double i3 = integrate(state[2]);
  const double i4 = integrate(state[3]);
  const double m13 = i1 + i3;
  const double m14 = i1 + i4;
  const double m23 = i2 + i3;
  return Masses{m13, m14, m23, m14 + m23 - m13};
}

double linf_norm(const Field& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double lp_norm(const Field& f, double p) {
  if (std::isinf(p) && p > 0) return linf_norm(f);
  if (!(p >= 1.0)) throw ParameterError("lp_norm requires p >= 1");
  double sum = 0.0;
  if (p == 1.0) {
    for (double v : f.values()) sum += std::abs(v);
    return f.grid()->cell_volume() * sum;
  }
  if (p == 2.0) {
    for (double v : f.values()) sum += v * v;
    return std::sqrt(f.grid()->cell_volume() * sum);
  }
  for (double v : f.values()) sum += std::pow(std::abs(v), p);
  return std::pow(f.grid()->cell_volume() * sum, 1.0 / p);
}

}  // namespace rxd
