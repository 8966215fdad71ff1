#include "rxd/cli/runner.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "json.hpp"
#include "rxd/cli/acceptance.hpp"
#include "rxd/cli/output.hpp"
#include "rxd/equilibrium.hpp"

namespace rxd::cli {

using nlohmann::ordered_json;

namespace {

const char* kind_name(InitialSpec::Kind k) {
  switch (k) {
    case InitialSpec::Kind::constant: return "constant";
    case InitialSpec::Kind::cosine: return "cosine";
    case InitialSpec::Kind::equilibrium: return "equilibrium";
    case InitialSpec::Kind::sampled: return "sampled";
  }
  return "?";
}

ordered_json echo(const RunConfig& c) {
  ordered_json j;
  j["run"] = {{"mode", to_string(c.mode)}, {"seed", c.seed}};
  j["domain"] = {{"dimension", c.domain.dimension}, {"lx", c.domain.lengths[0]}};
  if (c.domain.dimension == 2) j["domain"]["ly"] = c.domain.lengths[1];
  j["grid"] = {{"nx", c.cells[0]}};
  if (c.domain.dimension == 2) j["grid"]["ny"] = c.cells[1];
  j["diffusion"] = {{"d1", c.diffusion.d1}, {"d2", c.diffusion.d2}, {"d3", c.diffusion.d3}, {"d4", c.diffusion.d4}};
  ordered_json init{{"kind", kind_name(c.initial.kind)}};
  if (c.initial.kind == InitialSpec::Kind::constant) {
    for (int k = 0; k < kSpecies; ++k) init["u" + std::to_string(k + 1)] = c.initial.values[k];
  } else if (c.initial.kind == InitialSpec::Kind::cosine) {
    init["species"] = c.initial.species;
    init["amplitude"] = c.initial.amplitude;
    init["mode"] = c.initial.mode;
  }
  j["initial"] = init;
  if (c.masses) j["masses"] = {{"m13", c.masses->m13}, {"m14", c.masses->m14}, {"m23", c.masses->m23}};
  j["sampler"] = {{"roughness", c.roughness}, {"amplitude", c.sampler_amplitude}};
  const IntegratorConfig& ic = c.integrator;
  j["integrator"] = {{"dt_max", ic.dt_max},
                     {"theta", ic.theta},
                     {"t_end", ic.t_end},
                     {"splitting", ic.splitting == Splitting::strang ? "strang" : "lie"},
                     {"diffusion", ic.diffusion == DiffusionScheme::exact ? "exact" : "implicit_euler"},
                     {"reaction", ic.reaction},
                     {"cg_tolerance", ic.cg_tolerance}};
  j["output"] = {{"csv", c.output.csv},
                 {"svg_prefix", c.output.svg_prefix},
                 {"report", c.output.report},
                 {"sample_every", c.output.sample_every}};
  j["lab"] = {{"samples", c.lab.samples},
              {"gamma", c.lab.gamma},
              {"q", c.q()},
              {"production", c.lab.production == ProductionKind::surrogate ? "surrogate" : "full"}};
  return j;
}

Equilibrium equilibrium_of(const RunConfig& c) { return compute_equilibrium(*c.masses, c.domain.volume()); }

// Linear axis when a series touches zero, log axis otherwise.
bool all_positive(const std::vector<Series>& series) {
  for (const auto& s : series)
    for (double y : s.y)
      if (!(y > 0.0)) return false;
  return true;
}

void write_plots(const RunConfig& c, const TrajectoryRecord& traj) {
  const auto& recs = traj.diagnostics;
  if (recs.size() < 2) return;
  std::vector<double> t;
  for (const auto& r : recs) t.push_back(r.t);

  std::vector<Series> h{{"H", t, {}}};
  for (const auto& r : recs) h[0].y.push_back(r.H);
  emit_svg_lineplot(h, c.output.svg_prefix + "_entropy.svg",
                    PlotOptions{"relative entropy", "t", "H", all_positive(h)});

  std::vector<Series> dist;
  for (int k = 0; k < kSpecies; ++k) {
    Series s{"u" + std::to_string(k + 1), t, {}};
    for (const auto& r : recs) s.y.push_back(r.linf_dist[k]);
    dist.push_back(std::move(s));
  }
  emit_svg_lineplot(dist, c.output.svg_prefix + "_linf_dist.svg",
                    PlotOptions{"sup distance to equilibrium", "t", "|u_i - u_i,inf|_inf", all_positive(dist)});

  const Masses& m0 = recs.front().masses;
  const double scale = m0.scale();
  std::vector<Series> drift{{"m13", t, {}}, {"m14", t, {}}, {"m23", t, {}}};
  for (const auto& r : recs) {
    drift[0].y.push_back((r.masses.m13 - m0.m13) / scale);
    drift[1].y.push_back((r.masses.m14 - m0.m14) / scale);
    drift[2].y.push_back((r.masses.m23 - m0.m23) / scale);
  }
  emit_svg_lineplot(drift, c.output.svg_prefix + "_mass_drift.svg",
                    PlotOptions{"relative mass drift", "t", "drift", false});
}

int simulate(const RunConfig& c, std::ostream& out) {
  const State s0 = initial_state(c);
  EvolveOptions opts;
  opts.q = c.q();
  const TrajectoryRecord traj = evolve(s0, c.diffusion, c.integrator, c.output.sample_every, opts);
  write_trajectory_csv(c.output.csv, traj.diagnostics);
  if (!c.output.svg_prefix.empty()) write_plots(c, traj);
  const auto& last = traj.diagnostics.back();
  out << "steps " << traj.steps << ", samples " << traj.diagnostics.size() << "\n";
  out << "t = " << format_double(last.t) << ", H = " << format_double(last.H) << ", D = " << format_double(last.D)
      << "\n";
  out << "max relative mass drift " << format_double(traj.max_mass_drift) << "\n";
  out << "csv: " << c.output.csv << "\n";
  return kExitOk;
}

int lab(const RunConfig& c, std::ostream& out) {
  const SamplerConfig sampler = c.sampler();
  LabOptions opts;
  opts.threads = c.lab.threads;
  EmpiricalConstant ec;
  switch (c.mode) {
    case Mode::lab_beta: ec = estimate_beta(sampler, c.diffusion, c.lab.samples, opts); break;
    case Mode::lab_k1:
      ec = estimate_K1(sampler, c.diffusion, equilibrium_of(c), c.q(), c.lab.samples, opts, c.lab.production);
      break;
    case Mode::lab_ckp: ec = estimate_ckp(sampler, equilibrium_of(c), c.lab.samples, opts); break;
    default: throw ContractError("lab: not a lab mode");
  }
  ordered_json j;
  j["constant"] = ec.name;
  j["kind"] = ec.kind == EmpiricalConstant::Kind::inf ? "inf" : "sup";
  j["value"] = ec.value;
  j["samples"] = ec.sample_count;
  j["excluded"] = ec.excluded;
  j["seed"] = ec.seed;
  j["extremal_index"] = ec.extremal_index;
  j["extremal_token"] = ec.extremal_token();
  j["config_echo"] = echo(c);
  const std::string text = j.dump(2) + "\n";
  if (c.output.report.empty()) {
    out << text;
  } else {
    std::ofstream f(c.output.report, std::ios::binary);
    if (!f) throw ConfigError("output.report: cannot open " + c.output.report + " for writing");
    f << text;
    out << ec.name << " = " << format_double(ec.value) << " over " << ec.sample_count << " samples; report: "
        << c.output.report << "\n";
  }
  return kExitOk;
}

int equilibrium(const RunConfig& c, std::ostream& out) {
  const Equilibrium eq = equilibrium_of(c);
  out << "u_inf = (" << format_double(eq[0]) << ", " << format_double(eq[1]) << ", " << format_double(eq[2]) << ", "
      << format_double(eq[3]) << ")\n";
  const auto r = equilibrium_residual(eq);
  out << "residuals: detailed balance " << format_double(r[0]) << ", m13 " << format_double(r[1]) << ", m14 "
      << format_double(r[2]) << ", m23 " << format_double(r[3]) << "\n";
  return kExitOk;
}

int validate(const RunConfig& c, std::ostream& out) {
  AcceptanceOptions opts;
  opts.threads = c.lab.threads;
  const auto results = run_acceptance(opts, &out);
  print_acceptance_table(out, results);
  return all_passed(results) ? kExitOk : kExitValidate;
}

}  // namespace

State initial_state(const RunConfig& c) {
  const GridPtr g = c.make_grid();
  switch (c.initial.kind) {
    case InitialSpec::Kind::constant: return State::constant(g, c.initial.values);
    case InitialSpec::Kind::equilibrium: return equilibrium_state(equilibrium_of(c), g);
    case InitialSpec::Kind::sampled: return sample_state(c.sampler(), 0);
    case InitialSpec::Kind::cosine: {
      const Equilibrium eq = equilibrium_of(c);
      const double kx = std::numbers::pi * c.initial.mode / c.domain.lengths[0];
      const double ky = std::numbers::pi * c.initial.mode / c.domain.lengths[1];
      const bool two_d = c.domain.dimension == 2;
      const double a = c.initial.amplitude;
      std::array<Field, kSpecies> f{Field(g, eq[0]), Field(g, eq[1]), Field(g, eq[2]), Field(g, eq[3])};
      const int s = c.initial.species - 1;
      f[s] = Field::from_function(g, [&](double x, double y) {
        return eq[s] * (1.0 + a * std::cos(kx * x) * (two_d ? std::cos(ky * y) : 1.0));
      });
      return State(std::move(f), 0.0);
    }
  }
  throw ContractError("initial_state: unknown kind");
}

std::string config_echo_json(const RunConfig& config) { return echo(config).dump(2); }

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.mode) {
      case Mode::simulate: return simulate(config, out);
      case Mode::lab_beta:
      case Mode::lab_k1:
      case Mode::lab_ckp: return lab(config, out);
      case Mode::equilibrium: return equilibrium(config, out);
      case Mode::validate: return validate(config, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParameterError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NoEquilibriumError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalFailure& e) {
    err << "numerical failure at t = " << format_double(e.time()) << ": " << e.what() << "\n";
    return kExitNumerical;
  } catch (const EstimationFailure& e) {
    err << "estimation failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}

int run_file(const std::string& path, std::ostream& out, std::ostream& err, std::optional<unsigned> threads) {
  RunConfig config;
  try {
    config = load_config(path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  if (threads) config.lab.threads = *threads;
  return run(config, out, err);
}

}  // namespace rxd::cli
