#pragma once

#include <cstddef>
#include <span>

namespace rxd {

/// Ordinary least squares y = intercept + slope * x.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  bool degenerate = false;  // y constant: slope forced to 0, r^2 = 0
};

LinearFit least_squares(std::span<const double> x, std::span<const double> y);

/// v(t) ~ amplitude * exp(-rate t) (exponential) or
/// v(t) ~ amplitude * exp(-rate (1 + t)^stretch_exponent) (stretched).
struct DecayFit {
  enum class Kind { exponential, stretched };
  Kind kind = Kind::exponential;
  double rate = 0.0;
  double stretch_exponent = 1.0;
  double amplitude = 0.0;
  double r_squared = 0.0;
  std::size_t samples_used = 0;
  /// Constant series, or parameters outside the decay family (rate <= 0,
  /// stretch exponent outside (0, 1]).
  bool degenerate = false;
};

/// Least squares on ln v = ln A - rate t. Needs >= 4 samples, v > 0 and
/// strictly increasing times; throws ParameterError otherwise.
DecayFit fit_exponential(std::span<const double> times, std::span<const double> values);

/// Least squares on ln(-ln(v / reference)) = ln c + eps ln(1 + t) over the
/// samples with v < reference. The amplitude is the given reference.
DecayFit fit_stretched_exponential(std::span<const double> times, std::span<const double> values,
                                   double reference);
/// Same, with reference = values.front().
DecayFit fit_stretched_exponential(std::span<const double> times, std::span<const double> values);

/// norm(t) ~ prefactor * (1 + t)^exponent.
struct GrowthFit {
  double exponent = 0.0;
  double prefactor = 0.0;
  double r_squared = 0.0;
  bool degenerate = false;
};

GrowthFit growth_fit(std::span<const double> times, std::span<const double> norms);

}  // namespace rxd
