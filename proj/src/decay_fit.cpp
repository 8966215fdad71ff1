#include "rxd/decay_fit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rxd/errors.hpp"

namespace rxd {

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) throw ParameterError("least_squares needs matching series of length >= 2");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  LinearFit fit;
  const auto [ymin, ymax] = std::minmax_element(y.begin(), y.end());
  if (*ymax - *ymin <= 1e-14 * std::max(1.0, std::abs(my))) {
    fit.intercept = my;
    fit.degenerate = true;
    return fit;
  }
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw ParameterError("least_squares: abscissae are all equal");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

namespace {

void check_series(std::span<const double> times, std::span<const double> values, const char* what) {
  if (times.size() != values.size()) throw ParameterError(std::string(what) + ": series lengths differ");
  if (times.size() < 4) throw ParameterError(std::string(what) + ": at least 4 samples required");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) throw ParameterError(std::string(what) + ": values must be positive");
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw ParameterError(std::string(what) + ": times must be strictly increasing");
    }
  }
}

}  // namespace

DecayFit fit_exponential(std::span<const double> times, std::span<const double> values) {
  check_series(times, values, "fit_exponential");
  std::vector<double> logs(values.size());
  std::transform(values.begin(), values.end(), logs.begin(), [](double v) { return std::log(v); });
  const LinearFit lf = least_squares(times, logs);

  DecayFit fit;
  fit.kind = DecayFit::Kind::exponential;
  fit.rate = -lf.slope;
  fit.amplitude = std::exp(lf.intercept);
  fit.r_squared = lf.r_squared;
  fit.samples_used = values.size();
  fit.degenerate = lf.degenerate || !(fit.rate > 0.0);
  return fit;
}

DecayFit fit_stretched_exponential(std::span<const double> times, std::span<const double> values,
                                   double reference) {
  check_series(times, values, "fit_stretched_exponential");
  if (!(reference > 0.0)) throw ParameterError("fit_stretched_exponential: reference must be positive");
  std::vector<double> x;
  std::vector<double> y;
  const double log_ref = std::log(reference);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] < reference)) continue;
    x.push_back(std::log1p(times[i]));
    y.push_back(std::log(log_ref - std::log(values[i])));
  }

  DecayFit fit;
  fit.kind = DecayFit::Kind::stretched;
  fit.amplitude = reference;
  fit.samples_used = x.size();
  if (x.size() < 3) {
    fit.degenerate = true;
    return fit;
  }
  const LinearFit lf = least_squares(x, y);
  fit.rate = std::exp(lf.intercept);
  fit.stretch_exponent = lf.slope;
  fit.r_squared = lf.r_squared;
  fit.degenerate = lf.degenerate || !(fit.stretch_exponent > 0.0 && fit.stretch_exponent <= 1.0);
  return fit;
}

DecayFit fit_stretched_exponential(std::span<const double> times, std::span<const double> values) {
  if (values.empty()) throw ParameterError("fit_stretched_exponential: empty series");
  return fit_stretched_exponential(times, values, values.front());
}

GrowthFit growth_fit(std::span<const double> times, std::span<const double> norms) {
  check_series(times, norms, "growth_fit");
  std::vector<double> x(times.size());
  std::vector<double> y(norms.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    x[i] = std::log1p(times[i]);
    y[i] = std::log(norms[i]);
  }
  const LinearFit lf = least_squares(x, y);
  return GrowthFit{lf.slope, std::exp(lf.intercept), lf.r_squared, lf.degenerate};
}

}  // namespace rxd
