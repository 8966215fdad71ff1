#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "rxd/core_model.hpp"
#include "rxd/dynamics.hpp"
#include "rxd/errors.hpp"
#include "rxd/inequality_lab.hpp"

namespace rxd::cli {

/// Bad or missing configuration key. The message names the key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Mode { simulate, lab_beta, lab_k1, lab_ckp, equilibrium, validate };

std::string to_string(Mode m);

struct InitialSpec {
  enum class Kind { constant, cosine, equilibrium, sampled };
  Kind kind = Kind::equilibrium;
  std::array<double, kSpecies> values{1, 1, 1, 1};  // constant
  int species = 1;                                  // cosine: 1..4
  double amplitude = 0.1;                           // cosine: |A| < 1
  int mode = 1;                                     // cosine wave number
};

struct OutputSpec {
  std::string csv = "trajectory.csv";
  std::string svg_prefix;  // empty: no plots
  std::string report;      // empty: JSON to stdout
  double sample_every = 0.1;
};

struct LabSpec {
  std::size_t samples = 1000;
  double gamma = 1.0;
  std::optional<double> q;  // unset: dimension default with gamma
  ProductionKind production = ProductionKind::surrogate;
  unsigned threads = 0;
};

struct RunConfig {
  Mode mode = Mode::simulate;
  std::uint64_t seed = 1;
  DomainSpec domain = DomainSpec::interval(1.0);
  std::array<int, 2> cells{64, 1};
  DiffusionCoeffs diffusion{1.0, 1.0, 1.0, 0.0};
  InitialSpec initial;
  std::optional<Masses> masses;
  int roughness = 4;
  double sampler_amplitude = 0.5;
  IntegratorConfig integrator;
  OutputSpec output;
  LabSpec lab;

  GridPtr make_grid() const;
  SamplerConfig sampler() const;
  /// q for the L^q diagnostics: lab.q when set, else the entropy-method default.
  double q() const;
};

/// Parses an INI document. Unknown sections and keys are rejected.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace rxd::cli
