#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rxd/core_model.hpp"
#include "rxd/discrete_ops.hpp"
#include "rxd/entropy_diag.hpp"
#include "rxd/equilibrium.hpp"

namespace rxd {

/// Random positive states with prescribed conservation laws.
struct SamplerConfig {
  GridPtr grid;
  Masses masses;
  int roughness = 4;       // number of cosine modes per axis
  double amplitude = 0.5;  // in [0, 1)
  std::uint64_t seed = 1;

  void validate() const;
};

/// Sample number `index` of the stream identified by cfg.seed. The split of
/// the masses is drawn through t = int u1 on its admissible open interval;
/// each field is mean * (1 + amplitude * b) with b a zero-mean smooth
/// cosine series scaled to max |b| = 1, then rescaled to its target integral.
State sample_state(const SamplerConfig& cfg, std::uint64_t index = 0);

/// D_tilde / ||sqrt(u4) - avg sqrt(u4)||^2, or nullopt when the denominator
/// is below 1e-14.
std::optional<double> indirect_diffusion_ratio(const State& state, const DiffusionCoeffs& d,
                                               const LaplacianStencil& stencil);

/// |d_i - d3| / (d_i + d3) < delta for i in {1, 2}.
bool quasi_uniform_predicate(const DiffusionCoeffs& d, int i, double delta);

struct EmpiricalConstant {
  enum class Kind { inf, sup };
  std::string name;
  double value = 0.0;
  Kind kind = Kind::inf;
  std::size_t sample_count = 0;  // samples that entered the extremum
  std::size_t excluded = 0;      // flagged samples left out
  std::uint64_t seed = 0;
  std::uint64_t extremal_index = 0;

  /// "seed:index" of the extremal sample; sample_state(cfg, index) rebuilds it.
  std::string extremal_token() const;
};

/// One evaluated sample: the ratio (nullopt when flagged) and the norm factor
/// it was scaled by (1 for beta and CKP).
struct LabSample {
  std::uint64_t index = 0;
  std::optional<double> ratio;
  double norm_factor = 1.0;
};

struct LabOptions {
  /// Worker threads; 0 reads RXDLAB_THREADS or falls back to 1.
  unsigned threads = 0;
  /// When set, receives every evaluated sample in index order.
  std::vector<LabSample>* scatter = nullptr;
};

/// Which production the K1 ratio divides by.
enum class ProductionKind { surrogate, full };

/// inf over samples of indirect_diffusion_ratio. Throws EstimationFailure when
/// every sample is degenerate.
EmpiricalConstant estimate_beta(const SamplerConfig& cfg, const DiffusionCoeffs& d, std::size_t n_samples,
                                const LabOptions& options = {});

/// sup over samples of H / (P (1 + max_i ln(||u_i||_inf + 1)) (1 + max_{i=1,4} ||u_i||_q))
/// with P = D_tilde (default) or D. Samples with P = 0 are excluded.
EmpiricalConstant estimate_K1(const SamplerConfig& cfg, const DiffusionCoeffs& d, const Equilibrium& eq, double q,
                              std::size_t n_samples, const LabOptions& options = {},
                              ProductionKind production = ProductionKind::surrogate);

/// inf over samples of ckp_ratio.
EmpiricalConstant estimate_ckp(const SamplerConfig& cfg, const Equilibrium& eq, std::size_t n_samples,
                               const LabOptions& options = {});

/// Thread count from RXDLAB_THREADS (>= 1), defaulting to 1.
unsigned default_thread_count();

}  // namespace rxd
