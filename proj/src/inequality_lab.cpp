#include "rxd/inequality_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

namespace rxd {

void SamplerConfig::validate() const {
  if (!grid) throw ParameterError("sampler requires a grid");
  masses.validate_positive();
  if (roughness < 0) throw ParameterError("sampler.roughness must be nonnegative");
  if (!(amplitude >= 0.0 && amplitude < 1.0)) throw ParameterError("sampler.amplitude must lie in [0, 1)");
}

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Zero-mean cosine series with Neumann symmetry, scaled to max |b| = 1.
std::vector<double> smooth_bump(const Grid& g, int roughness, std::mt19937_64& rng) {
  std::vector<double> b(g.cell_count(), 0.0);
  if (roughness == 0) return b;
  std::normal_distribution<double> normal(0.0, 1.0);
  const double lx = g.domain().lengths[0];
  const double ly = g.domain().lengths[1];
  const int ky_max = g.dimension() == 2 ? roughness : 0;
  for (int ky = 0; ky <= ky_max; ++ky) {
    for (int kx = 0; kx <= roughness; ++kx) {
      if (kx == 0 && ky == 0) continue;
      const double coef = normal(rng) / std::sqrt(static_cast<double>(kx * kx + ky * ky));
      for (int j = 0; j < g.cells(1); ++j) {
        const double cy = ky == 0 ? 1.0 : std::cos(std::numbers::pi * ky * g.center(1, j) / ly);
        for (int i = 0; i < g.cells(0); ++i) {
          b[g.index(i, j)] += coef * cy * std::cos(std::numbers::pi * kx * g.center(0, i) / lx);
        }
      }
    }
  }
  double mean = 0.0;
  for (double v : b) mean += v;
  mean /= static_cast<double>(b.size());
  double peak = 0.0;
  for (double& v : b) {
    v -= mean;
    peak = std::max(peak, std::abs(v));
  }
  if (peak > 0.0) {
    for (double& v : b) v /= peak;
  }
  return b;
}

}  // namespace

State sample_state(const SamplerConfig& cfg, std::uint64_t index) {
  cfg.validate();
  const Grid& g = *cfg.grid;
  const Masses& m = cfg.masses;
  auto rng = make_rng(cfg.seed, index);

  const double lo = std::max(0.0, m.m13 - m.m23);
  const double hi = std::min(m.m13, m.m14);
  if (!(hi > lo)) throw ParameterError("sampler: masses leave no admissible split");
  std::uniform_real_distribution<double> split(lo, hi);
  double t = split(rng);
  while (!(t > lo && t < hi)) t = split(rng);

  const std::array<double, kSpecies> targets{t, m.m23 - m.m13 + t, m.m13 - t, m.m14 - t};
  std::array<Field, kSpecies> fields{Field(cfg.grid, 0.0), Field(cfg.grid, 0.0), Field(cfg.grid, 0.0),
                                     Field(cfg.grid, 0.0)};
  for (int s = 0; s < kSpecies; ++s) {
    const double mean = targets[s] / g.volume();
    std::vector<double> v = smooth_bump(g, cfg.roughness, rng);
    double sum = 0.0;
    for (double& x : v) {
      x = mean * (1.0 + cfg.amplitude * x);
      sum += x;
    }
    const double scale = targets[s] / (g.cell_volume() * sum);
    for (double& x : v) x *= scale;
    fields[s] = Field(cfg.grid, std::move(v));
  }
  return State(std::move(fields), 0.0);
}

std::optional<double> indirect_diffusion_ratio(const State& state, const DiffusionCoeffs& d,
                                               const LaplacianStencil& stencil) {
  const double denom = sqrt_variance(state[3]);
  if (denom < 1e-14) return std::nullopt;
  return fisher_surrogate(state, d, stencil) / denom;
}

bool quasi_uniform_predicate(const DiffusionCoeffs& d, int i, double delta) {
  if (i != 1 && i != 2) throw ParameterError("quasi_uniform_predicate: i must be 1 or 2");
  if (!(delta > 0.0)) throw ParameterError("quasi_uniform_predicate: delta must be positive");
  const double di = i == 1 ? d.d1 : d.d2;
  return std::abs(di - d.d3) / (di + d.d3) < delta;
}

std::string EmpiricalConstant::extremal_token() const {
  return std::to_string(seed) + ":" + std::to_string(extremal_index);
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("RXDLAB_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return 1;
}

namespace {

using Evaluator = std::function<LabSample(std::uint64_t)>;

std::vector<LabSample> run_sweep(std::size_t n, const Evaluator& eval, unsigned threads) {
  std::vector<LabSample> out(n);
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = eval(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += threads) out[i] = eval(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// Index-ordered reduction; ties keep the lowest index.
EmpiricalConstant reduce(std::vector<LabSample> samples, EmpiricalConstant::Kind kind, std::string name,
                         std::uint64_t seed, const LabOptions& options) {
  EmpiricalConstant c;
  c.name = std::move(name);
  c.kind = kind;
  c.seed = seed;
  c.value = kind == EmpiricalConstant::Kind::inf ? std::numeric_limits<double>::infinity()
                                                  : -std::numeric_limits<double>::infinity();
  for (const LabSample& s : samples) {
    if (!s.ratio) {
      ++c.excluded;
      continue;
    }
    ++c.sample_count;
    const double r = *s.ratio;
    const bool better = kind == EmpiricalConstant::Kind::inf ? r < c.value : r > c.value;
    if (better) {
      c.value = r;
      c.extremal_index = s.index;
    }
  }
  if (c.sample_count == 0) {
    throw EstimationFailure(c.name + ": every sample was degenerate (" + std::to_string(c.excluded) + " flagged)");
  }
  if (options.scatter) *options.scatter = std::move(samples);
  return c;
}

}  // namespace

EmpiricalConstant estimate_beta(const SamplerConfig& cfg, const DiffusionCoeffs& d, std::size_t n_samples,
                                const LabOptions& options) {
  if (n_samples < 1) throw ParameterError("estimate_beta: n_samples must be >= 1");
  cfg.validate();
  d.validate();
  const LaplacianStencil stencil(cfg.grid);
  auto samples = run_sweep(
      n_samples,
      [&](std::uint64_t i) {
        const State s = sample_state(cfg, i);
        return LabSample{i, indirect_diffusion_ratio(s, d, stencil), 1.0};
      },
      options.threads);
  return reduce(std::move(samples), EmpiricalConstant::Kind::inf, "beta", cfg.seed, options);
}

EmpiricalConstant estimate_K1(const SamplerConfig& cfg, const DiffusionCoeffs& d, const Equilibrium& eq, double q,
                              std::size_t n_samples, const LabOptions& options, ProductionKind production) {
  if (n_samples < 1) throw ParameterError("estimate_K1: n_samples must be >= 1");
  if (!(q >= 1.0)) throw ParameterError("estimate_K1: q must be >= 1");
  cfg.validate();
  d.validate();
  const double tol = 1e-10 * eq.masses.scale();
  if (std::abs(cfg.masses.m13 - eq.masses.m13) > tol || std::abs(cfg.masses.m14 - eq.masses.m14) > tol ||
      std::abs(cfg.masses.m23 - eq.masses.m23) > tol) {
    throw ContractError("estimate_K1: sampler masses differ from the equilibrium masses");
  }
  const LaplacianStencil stencil(cfg.grid);
  auto samples = run_sweep(
      n_samples,
      [&](std::uint64_t i) {
        const State s = sample_state(cfg, i);
        const double h = relative_entropy(s, eq);
        const double p = production == ProductionKind::surrogate ? fisher_surrogate(s, d, stencil)
                                                                 : entropy_production(s, d, stencil).value;
        double log_factor = 0.0;
        for (int k = 0; k < kSpecies; ++k) log_factor = std::max(log_factor, std::log(linf_norm(s[k]) + 1.0));
        const double lq = std::max(lp_norm(s[0], q), lp_norm(s[3], q));
        const double factor = (1.0 + log_factor) * (1.0 + lq);
        LabSample out{i, std::nullopt, factor};
        if (p > 0.0 && std::isfinite(p)) out.ratio = h / (p * factor);
        return out;
      },
      options.threads);
  return reduce(std::move(samples), EmpiricalConstant::Kind::sup, "K1", cfg.seed, options);
}

EmpiricalConstant estimate_ckp(const SamplerConfig& cfg, const Equilibrium& eq, std::size_t n_samples,
                               const LabOptions& options) {
  if (n_samples < 1) throw ParameterError("estimate_ckp: n_samples must be >= 1");
  cfg.validate();
  auto samples = run_sweep(
      n_samples,
      [&](std::uint64_t i) {
        const State s = sample_state(cfg, i);
        return LabSample{i, ckp_ratio(s, eq, MassCheck::enforce), 1.0};
      },
      options.threads);
  return reduce(std::move(samples), EmpiricalConstant::Kind::inf, "C_CKP", cfg.seed, options);
}

}  // namespace rxd
