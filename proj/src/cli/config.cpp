#include "rxd/cli/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rxd/equilibrium.hpp"

namespace rxd::cli {

namespace pt = boost::property_tree;

std::string to_string(Mode m) {
  switch (m) {
    case Mode::simulate: return "simulate";
    case Mode::lab_beta: return "lab-beta";
    case Mode::lab_k1: return "lab-k1";
    case Mode::lab_ckp: return "lab-ckp";
    case Mode::equilibrium: return "equilibrium";
    case Mode::validate: return "validate";
  }
  return "?";
}

GridPtr RunConfig::make_grid() const { return rxd::make_grid(domain, cells); }

SamplerConfig RunConfig::sampler() const {
  SamplerConfig s;
  s.grid = make_grid();
  s.masses = masses.value_or(Masses{});
  s.roughness = roughness;
  s.amplitude = sampler_amplitude;
  s.seed = seed;
  return s;
}

double RunConfig::q() const { return lab.q ? *lab.q : entropy_method_q(domain.dimension, lab.gamma); }

namespace {

const std::map<std::string, std::set<std::string>> kSchema{
    {"run", {"mode", "seed"}},
    {"domain", {"dimension", "lx", "ly"}},
    {"grid", {"nx", "ny"}},
    {"diffusion", {"d1", "d2", "d3", "d4"}},
    {"initial", {"kind", "u1", "u2", "u3", "u4", "species", "amplitude", "mode"}},
    {"masses", {"m13", "m14", "m23"}},
    {"sampler", {"roughness", "amplitude"}},
    {"integrator", {"dt_max", "theta", "t_end", "splitting", "diffusion", "reaction", "cg_tolerance"}},
    {"output", {"csv", "svg_prefix", "report", "sample_every"}},
    {"lab", {"samples", "gamma", "q", "production", "threads"}},
};

class Reader {
 public:
  explicit Reader(const pt::ptree& tree) : tree_(tree) {}

  bool has(const std::string& key) const { return tree_.get_child_optional(pt::ptree::path_type(key, '.')) != boost::none; }

  bool has_section(const std::string& section) const { return tree_.get_child_optional(section) != boost::none; }

  std::string text(const std::string& key) const {
    return tree_.get<std::string>(pt::ptree::path_type(key, '.'));
  }

  double number(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    return parse_double(key, text(key));
  }

  long integer(const std::string& key, long fallback) const {
    if (!has(key)) return fallback;
    const std::string s = text(key);
    long v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) throw ConfigError(key + ": expected an integer, got '" + s + "'");
    return v;
  }

  std::string word(const std::string& key, const std::string& fallback) const { return has(key) ? text(key) : fallback; }

  bool flag(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string s = text(key);
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw ConfigError(key + ": expected a boolean, got '" + s + "'");
  }

  static double parse_double(const std::string& key, const std::string& s) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) throw ConfigError(key + ": expected a number, got '" + s + "'");
    return v;
  }

 private:
  const pt::ptree& tree_;
};

void check_schema(const pt::ptree& tree) {
  for (const auto& [section, body] : tree) {
    const auto it = kSchema.find(section);
    if (it == kSchema.end()) {
      if (body.empty()) throw ConfigError(section + ": keys must live inside a section");
      throw ConfigError("unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      if (!it->second.count(key)) throw ConfigError("unknown key " + section + "." + key);
    }
  }
}

Mode parse_mode(const std::string& s) {
  static const std::map<std::string, Mode> modes{{"simulate", Mode::simulate},       {"lab-beta", Mode::lab_beta},
                                                 {"lab-k1", Mode::lab_k1},           {"lab-ckp", Mode::lab_ckp},
                                                 {"equilibrium", Mode::equilibrium}, {"validate", Mode::validate}};
  const auto it = modes.find(s);
  if (it == modes.end()) throw ConfigError("run.mode: unknown mode '" + s + "'");
  return it->second;
}

// Rethrow library parameter errors as config errors naming the key.
template <typename F>
void guarded(const std::string& key, F&& f) {
  try {
    f();
  } catch (const ParameterError& e) {
    const std::string what = e.what();
    throw ConfigError(what.find(key) == std::string::npos ? key + ": " + what : what);
  } catch (const NoEquilibriumError& e) {
    const std::string what = e.what();
    throw ConfigError(what.find(key) == std::string::npos ? key + ": " + what : what);
  }
}

bool needs_masses(const RunConfig& c) {
  switch (c.mode) {
    case Mode::lab_beta:
    case Mode::lab_k1:
    case Mode::lab_ckp:
    case Mode::equilibrium: return true;
    case Mode::simulate: return c.initial.kind != InitialSpec::Kind::constant;
    case Mode::validate: return false;
  }
  return false;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("malformed config (line " + std::to_string(e.line()) + "): " + e.message());
  }
  check_schema(tree);
  const Reader r(tree);
  RunConfig c;

  if (!r.has("run.mode")) throw ConfigError("run.mode is required");
  c.mode = parse_mode(r.text("run.mode"));
  const long seed = r.integer("run.seed", 1);
  if (seed < 0) throw ConfigError("run.seed must be nonnegative");
  c.seed = static_cast<std::uint64_t>(seed);

  const long dim = r.integer("domain.dimension", 1);
  if (dim == 1) {
    c.domain = DomainSpec::interval(r.number("domain.lx", 1.0));
    if (r.has("domain.ly")) throw ConfigError("domain.ly is only valid for dimension 2");
  } else if (dim == 2) {
    c.domain = DomainSpec::rectangle(r.number("domain.lx", 1.0), r.number("domain.ly", 1.0));
  } else {
    throw ConfigError("domain.dimension must be 1 or 2");
  }
  guarded("domain", [&] { c.domain.validate(); });

  const long nx = r.integer("grid.nx", 64);
  const long ny = dim == 2 ? r.integer("grid.ny", nx) : 1;
  if (dim == 1 && r.has("grid.ny")) throw ConfigError("grid.ny is only valid for dimension 2");
  if (nx < 1 || nx > 1 << 20) throw ConfigError("grid.nx must be a positive cell count");
  if (ny < 1 || ny > 1 << 20) throw ConfigError("grid.ny must be a positive cell count");
  c.cells = {static_cast<int>(nx), static_cast<int>(ny)};

  c.diffusion = {r.number("diffusion.d1", 1.0), r.number("diffusion.d2", 1.0), r.number("diffusion.d3", 1.0),
                 r.number("diffusion.d4", 0.0)};
  guarded("diffusion", [&] { c.diffusion.validate(); });

  const std::string kind = r.word("initial.kind", "equilibrium");
  if (kind == "constant") {
    c.initial.kind = InitialSpec::Kind::constant;
    for (int k = 0; k < kSpecies; ++k) {
      const std::string key = "initial.u" + std::to_string(k + 1);
      if (!r.has(key)) throw ConfigError(key + " is required for constant initial data");
      c.initial.values[k] = r.number(key, 0.0);
      if (!(c.initial.values[k] >= 0.0)) throw ConfigError(key + " must be nonnegative");
    }
  } else if (kind == "cosine") {
    c.initial.kind = InitialSpec::Kind::cosine;
    c.initial.species = static_cast<int>(r.integer("initial.species", 1));
    c.initial.amplitude = r.number("initial.amplitude", 0.1);
    c.initial.mode = static_cast<int>(r.integer("initial.mode", 1));
    if (c.initial.species < 1 || c.initial.species > kSpecies) throw ConfigError("initial.species must be 1..4");
    if (!(std::abs(c.initial.amplitude) < 1.0)) throw ConfigError("initial.amplitude must satisfy |A| < 1");
    if (c.initial.mode < 1) throw ConfigError("initial.mode must be >= 1");
  } else if (kind == "equilibrium") {
    c.initial.kind = InitialSpec::Kind::equilibrium;
  } else if (kind == "sampled") {
    c.initial.kind = InitialSpec::Kind::sampled;
  } else {
    throw ConfigError("initial.kind: unknown kind '" + kind + "'");
  }

  if (r.has_section("masses")) {
    for (const char* key : {"masses.m13", "masses.m14", "masses.m23"}) {
      if (!r.has(key)) throw ConfigError(std::string(key) + " is required");
    }
    c.masses = Masses::from_independent(r.number("masses.m13", 0), r.number("masses.m14", 0),
                                        r.number("masses.m23", 0));
    guarded("masses", [&] { c.masses->validate_positive(); });
  } else if (needs_masses(c)) {
    throw ConfigError("masses: section required for mode " + to_string(c.mode));
  }

  c.roughness = static_cast<int>(r.integer("sampler.roughness", 4));
  c.sampler_amplitude = r.number("sampler.amplitude", 0.5);
  if (c.roughness < 0) throw ConfigError("sampler.roughness must be nonnegative");
  if (!(c.sampler_amplitude >= 0.0 && c.sampler_amplitude < 1.0)) throw ConfigError("sampler.amplitude must lie in [0, 1)");

  IntegratorConfig& ic = c.integrator;
  ic.dt_max = r.number("integrator.dt_max", ic.dt_max);
  ic.theta = r.number("integrator.theta", ic.theta);
  ic.t_end = r.number("integrator.t_end", ic.t_end);
  ic.cg_tolerance = r.number("integrator.cg_tolerance", ic.cg_tolerance);
  ic.reaction = r.flag("integrator.reaction", true);
  const std::string split = r.word("integrator.splitting", "strang");
  if (split == "strang") {
    ic.splitting = Splitting::strang;
  } else if (split == "lie") {
    ic.splitting = Splitting::lie;
  } else {
    throw ConfigError("integrator.splitting must be strang or lie");
  }
  const std::string scheme = r.word("integrator.diffusion", "exact");
  if (scheme == "exact") {
    ic.diffusion = DiffusionScheme::exact;
  } else if (scheme == "implicit_euler") {
    ic.diffusion = DiffusionScheme::implicit_euler;
  } else {
    throw ConfigError("integrator.diffusion must be exact or implicit_euler");
  }
  guarded("integrator", [&] { ic.validate(); });

  c.output.csv = r.word("output.csv", c.output.csv);
  c.output.svg_prefix = r.word("output.svg_prefix", "");
  c.output.report = r.word("output.report", "");
  c.output.sample_every = r.number("output.sample_every", std::min(0.1, ic.t_end));
  if (!(c.output.sample_every > 0.0)) throw ConfigError("output.sample_every must be positive");

  const long samples = r.integer("lab.samples", 1000);
  if (samples < 1) throw ConfigError("lab.samples must be >= 1");
  c.lab.samples = static_cast<std::size_t>(samples);
  c.lab.gamma = r.number("lab.gamma", 1.0);
  if (!(c.lab.gamma > 0.0)) throw ConfigError("lab.gamma must be positive");
  if (r.has("lab.q")) {
    c.lab.q = r.number("lab.q", 1.0);
    if (!(*c.lab.q >= 1.0)) throw ConfigError("lab.q must be >= 1");
  }
  const std::string production = r.word("lab.production", "surrogate");
  if (production == "surrogate") {
    c.lab.production = ProductionKind::surrogate;
  } else if (production == "full") {
    c.lab.production = ProductionKind::full;
  } else {
    throw ConfigError("lab.production must be surrogate or full");
  }
  const long threads = r.integer("lab.threads", 0);
  if (threads < 0) throw ConfigError("lab.threads must be nonnegative");
  c.lab.threads = static_cast<unsigned>(threads);

  if (c.masses) {
    guarded("masses", [&] {
      if (c.mode != Mode::validate) (void)compute_equilibrium(*c.masses, c.domain.volume());
    });
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace rxd::cli
