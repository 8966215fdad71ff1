#include "rxd/cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "rxd/cli/output.hpp"
#include "rxd/cli/runner.hpp"
#include "rxd/decay_fit.hpp"
#include "rxd/dynamics.hpp"
#include "rxd/equilibrium.hpp"
#include "rxd/inequality_lab.hpp"

namespace rxd::cli {

namespace {

using std::numbers::pi;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

const DiffusionCoeffs kCoeffs{1.0, 0.5, 2.0, 0.0};

// Independent Newton solve of the equilibrium system.
std::array<double, 4> newton(double a, double b, double c) {
  std::array<double, 4> u{a / 2, c / 2, a / 2, b / 2};
  for (int it = 0; it < 100; ++it) {
    double m[4][5] = {{u[1], u[0], -u[3], -u[2], u[0] * u[1] - u[2] * u[3]},
                      {1, 0, 1, 0, u[0] + u[2] - a},
                      {1, 0, 0, 1, u[0] + u[3] - b},
                      {0, 1, 1, 0, u[1] + u[2] - c}};
    for (int k = 0; k < 4; ++k) {
      int p = k;
      for (int i = k + 1; i < 4; ++i)
        if (std::abs(m[i][k]) > std::abs(m[p][k])) p = i;
      for (int j = 0; j < 5; ++j) std::swap(m[k][j], m[p][j]);
      for (int i = k + 1; i < 4; ++i) {
        const double f = m[i][k] / m[k][k];
        for (int j = k; j < 5; ++j) m[i][j] -= f * m[k][j];
      }
    }
    std::array<double, 4> step{};
    for (int k = 3; k >= 0; --k) {
      double s = m[k][4];
      for (int j = k + 1; j < 4; ++j) s -= m[k][j] * step[j];
      step[k] = s / m[k][k];
    }
    double norm = 0.0;
    for (int k = 0; k < 4; ++k) {
      u[k] -= step[k];
      norm = std::max(norm, std::abs(step[k]));
    }
    if (norm < 1e-15 * (1 + a + b + c)) break;
  }
  return u;
}

Outcome equilibrium_exactness() {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> mass(0.01, 10.0);
  std::uniform_real_distribution<double> vol(0.1, 5.0);
  double worst_res = 0.0, worst_newton = 0.0;
  int n = 0;
  while (n < 1000) {
    const Masses m = Masses::from_independent(mass(rng), mass(rng), mass(rng));
    if (!(m.m24 > 0.0)) continue;
    ++n;
    const double v = vol(rng);
    const Equilibrium eq = compute_equilibrium(m, v);
    for (double r : equilibrium_residual(eq)) worst_res = std::max(worst_res, std::abs(r) / (1.0 + m.scale() / v));
    const auto ref = newton(m.m13 / v, m.m14 / v, m.m23 / v);
    for (int k = 0; k < 4; ++k) worst_newton = std::max(worst_newton, std::abs(ref[k] - eq[k]) / (1.0 + eq[k]));
  }
  return {worst_res <= 1e-12 && worst_newton <= 1e-10,
          "1000 triples, max residual " + num(worst_res) + ", max Newton gap " + num(worst_newton)};
}

// Criteria 2 and 3 share one long run.
struct LongRun {
  double drift = 0.0;
  double min_value = 0.0;
  bool finite = true;
  std::size_t steps = 0;
};

LongRun long_run() {
  auto g = make_grid_1d(1.0, 200);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  std::array<Field, kSpecies> f{Field(g, 0.0), Field(g, 0.0), Field(g, 0.0), Field(g, 0.0)};
  for (auto& field : f)
    for (double& x : field.values()) x = u(rng);
  State s(std::move(f), 0.0);
  const Masses m0 = masses_of(s);
  Stepper stepper(LaplacianStencil(g), kCoeffs, IntegratorConfig{});
  LongRun out;
  out.min_value = s.min_value();
  const double dt = 1e-4;
  for (int k = 0; k < 10000; ++k) {
    try {
      s = stepper.step(s, dt, (k + 1) * dt);
    } catch (const NumericalFailure&) {
      out.finite = false;
      break;
    }
    ++out.steps;
    out.min_value = std::min(out.min_value, s.min_value());
    const Masses m = masses_of(s);
    out.drift = std::max({out.drift, std::abs(m.m13 - m0.m13) / m0.m13, std::abs(m.m14 - m0.m14) / m0.m14,
                          std::abs(m.m23 - m0.m23) / m0.m23});
  }
  return out;
}

Outcome heat_kernel() {
  auto g = make_grid_1d(1.0, 256);
  const double d = 1.0;
  IntegratorConfig cfg;
  cfg.reaction = false;
  Stepper stepper(LaplacianStencil(g), DiffusionCoeffs{d, 1, 1, 0}, cfg);
  const Field mode = Field::from_function(g, [](double x, double) { return std::cos(pi * x); });
  double norm = 0.0;
  for (double v : mode.values()) norm += v * v;
  State s({Field::from_function(g, [](double x, double) { return 1.0 + 0.5 * std::cos(pi * x); }), Field(g, 1.0),
           Field(g, 1.0), Field(g, 0.0)},
          0.0);
  std::vector<double> t, a;
  auto project = [&] {
    double p = 0.0;
    for (std::size_t i = 0; i < mode.size(); ++i) p += (s[0][i] - 1.0) * mode[i];
    return p / norm;
  };
  t.push_back(0.0);
  a.push_back(project());
  for (int k = 1; k <= 40; ++k) {
    s = stepper.step(s, 0.005, k * 0.005);
    t.push_back(s.time());
    a.push_back(project());
  }
  const DecayFit fit = fit_exponential(t, a);
  const double target = d * pi * pi;
  const double rel = std::abs(fit.rate - target) / target;
  return {rel <= 0.01, "fitted rate " + num(fit.rate) + " vs d pi^2 = " + num(target) + " (rel. error " + num(rel) + ")"};
}

// Forward difference of H against D at the left end point: the defect is
// the O(dt) Taylor remainder.
Outcome dissipation_identity() {
  auto g = make_grid_1d(1.0, 200);
  const LaplacianStencil st(g);
  const State s0({Field::from_function(g, [](double x, double) { return 1.0 + 0.3 * std::cos(pi * x); }), Field(g, 1.0),
                  Field(g, 1.0), Field::from_function(g, [](double x, double) { return 1.0 - 0.3 * std::cos(pi * x); })},
                 0.0);
  const Equilibrium eq = compute_equilibrium(masses_of(s0), g->volume());
  Stepper stepper(st, kCoeffs, IntegratorConfig{});
  const double h0 = relative_entropy(s0, eq);
  const double d0 = entropy_production(s0, kCoeffs, st).value;
  std::vector<double> defects;
  for (double dt : {0.01, 0.005, 0.0025}) {
    const State s1 = stepper.step(s0, dt);
    defects.push_back(std::abs((relative_entropy(s1, eq) - h0) / dt + d0));
  }
  const double r1 = defects[0] / defects[1];
  const double r2 = defects[1] / defects[2];
  const bool ok = r1 >= 1.7 && r1 <= 2.3 && r2 >= 1.7 && r2 <= 2.3;
  return {ok, "defects " + num(defects[0]) + ", " + num(defects[1]) + ", " + num(defects[2]) + "; ratios " + num(r1) +
                  ", " + num(r2)};
}

// Criteria 6 and 12 share the relaxation trajectories.
struct Relaxation {
  std::string label;
  TrajectoryRecord traj;
  Equilibrium eq;
  double seconds = 0.0;
};

Relaxation relax(GridPtr g, double t_end, double sample_every) {
  const auto start = std::chrono::steady_clock::now();
  const Equilibrium eq = compute_equilibrium(Masses::from_independent(2 * g->volume(), 2 * g->volume(), 2 * g->volume()),
                                             g->volume());
  const bool two_d = g->dimension() == 2;
  std::array<Field, kSpecies> f{
      Field::from_function(g,
                           [two_d](double x, double y) {
                             return 1.0 + 0.1 * std::cos(pi * x) * (two_d ? std::cos(pi * y) : 1.0);
                           }),
      Field(g, 1.0), Field(g, 1.0), Field(g, 1.0)};
  IntegratorConfig cfg;
  cfg.t_end = t_end;
  cfg.dt_max = 0.01;
  Relaxation r{two_d ? "2D " + std::to_string(g->cells(0)) + "x" + std::to_string(g->cells(1))
                     : "1D " + std::to_string(g->cells(0)),
               evolve(State(std::move(f), 0.0), kCoeffs, cfg, sample_every), eq, 0.0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Outcome relaxation_check(const Relaxation& r, double budget_seconds) {
  const auto& recs = r.traj.diagnostics;
  const double slack = 1e-9 * recs.front().H;
  bool monotone = true;
  for (std::size_t n = 1; n < recs.size(); ++n) monotone = monotone && recs[n].H <= recs[n - 1].H + slack;
  std::vector<double> t, h;
  for (std::size_t n = recs.size() / 2; n < recs.size(); ++n) {
    t.push_back(recs[n].t);
    h.push_back(recs[n].H);
  }
  const DecayFit fit = fit_exponential(t, h);
  double dist = 0.0;
  for (double v : recs.back().linf_dist) dist = std::max(dist, v);
  const bool ok = monotone && fit.rate > 0.0 && fit.r_squared >= 0.99 && dist <= 1e-6 && r.seconds < budget_seconds;
  return {ok, r.label + ": H monotone " + (monotone ? "yes" : "no") + ", rate " + num(fit.rate) + ", r^2 " +
                  num(fit.r_squared) + ", final sup distance " + num(dist) + ", " + num(r.seconds) + " s"};
}

Outcome u3_bound(const Relaxation& r) {
  const auto& recs = r.traj.diagnostics;
  std::vector<double> t, n;
  for (const auto& rec : recs) {
    t.push_back(rec.t);
    n.push_back(rec.linf[2]);
  }
  const GrowthFit fit = growth_fit(t, n);
  const double half = recs.back().t / 2;
  double first = 0.0, second = 0.0;
  for (const auto& rec : recs) (rec.t <= half ? first : second) = std::max(rec.t <= half ? first : second, rec.linf[2]);
  const bool ok = fit.exponent <= 0.05 && second <= 1.01 * first;
  return {ok, r.label + ": growth exponent " + num(fit.exponent) + ", max over [T/2,T] / max over [0,T/2] = " +
                  num(second / first)};
}

Outcome ode_limit() {
  auto g = make_grid_1d(1.0, 4);
  IntegratorConfig cfg;
  cfg.t_end = 5.0;
  cfg.dt_max = 1e-3;
  const auto traj = evolve(State::constant(g, {2, 2, 0.5, 0.5}), kCoeffs, cfg, 0.05);
  // High-accuracy RK4 oracle stepped between sample times.
  std::array<double, 4> u{2, 2, 0.5, 0.5};
  auto rhs = [](const std::array<double, 4>& v) {
    const double r = v[0] * v[1] - v[2] * v[3];
    return std::array<double, 4>{-r, -r, r, r};
  };
  double gap = 0.0, closed_gap = 0.0, t_prev = 0.0;
  for (const auto& rec : traj.diagnostics) {
    const int sub = 2000;
    const double h = (rec.t - t_prev) / sub;
    for (int k = 0; k < sub && h > 0.0; ++k) {
      const auto k1 = rhs(u);
      std::array<double, 4> w{};
      for (int i = 0; i < 4; ++i) w[i] = u[i] + 0.5 * h * k1[i];
      const auto k2 = rhs(w);
      for (int i = 0; i < 4; ++i) w[i] = u[i] + 0.5 * h * k2[i];
      const auto k3 = rhs(w);
      for (int i = 0; i < 4; ++i) w[i] = u[i] + h * k3[i];
      const auto k4 = rhs(w);
      for (int i = 0; i < 4; ++i) u[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    t_prev = rec.t;
    const double s = 0.75 * (1 - std::exp(-5 * rec.t));
    const std::array<double, 4> exact{2 - s, 2 - s, 0.5 + s, 0.5 + s};
    for (int i = 0; i < 4; ++i) {
      gap = std::max(gap, std::abs(rec.linf[i] - u[i]));
      closed_gap = std::max(closed_gap, std::abs(rec.linf[i] - exact[i]));
    }
  }
  double limit = 0.0;
  for (int i = 0; i < 4; ++i) limit = std::max(limit, std::abs(traj.final_state[i].max() - 1.25));
  const bool ok = gap <= 1e-6 && closed_gap <= 1e-6 && limit <= 1e-6;
  return {ok, "sup gap to RK4 " + num(gap) + ", to closed form " + num(closed_gap) + ", |u(5) - 1.25| " + num(limit)};
}

SamplerConfig sampler(GridPtr g, std::uint64_t seed, double amplitude = 0.5) {
  SamplerConfig s;
  s.masses = Masses::from_independent(2 * g->volume(), 2 * g->volume(), 2 * g->volume());
  s.grid = std::move(g);
  s.seed = seed;
  s.amplitude = amplitude;
  return s;
}

Outcome production_bound() {
  std::size_t violations = 0, n = 0;
  double worst = 0.0;
  for (auto g : {make_grid_1d(1.0, 64), make_grid_2d(1.0, 1.0, 16, 16)}) {
    const LaplacianStencil st(g);
    for (std::uint64_t i = 0; i < 5000; ++i) {
      const State s = sample_state(sampler(g, 11, 0.9), i);
      const double d = entropy_production(s, kCoeffs, st).value;
      const double dt = fisher_surrogate(s, kCoeffs, st);
      const double excess = dt - d;
      worst = std::max(worst, excess / (1 + d));
      if (excess > 1e-12 * (1 + d)) ++violations;
      ++n;
    }
  }
  return {violations == 0 && n == 10000,
          std::to_string(n) + " states, " + std::to_string(violations) + " violations, max (D~ - D)/(1 + D) " + num(worst)};
}

Outcome indirect_diffusion(unsigned threads) {
  auto g = make_grid_1d(1.0, 64);
  LabOptions opts{threads, nullptr};
  const auto a = estimate_beta(sampler(g, 1), kCoeffs, 10000, opts);
  const auto b = estimate_beta(sampler(g, 2), kCoeffs, 10000, opts);
  const double ratio = std::max(a.value, b.value) / std::min(a.value, b.value);
  return {a.value > 0.0 && b.value > 0.0, "beta " + num(a.value) + " (" + a.extremal_token() + "), reseeded " +
                                              num(b.value) + " (" + b.extremal_token() + "), seed ratio " + num(ratio) +
                                              (ratio < 2.0 ? " < 2" : " >= 2")};
}

std::string scatter_summary(std::vector<LabSample> s) {
  std::vector<double> r;
  for (const auto& x : s)
    if (x.ratio) r.push_back(*x.ratio);
  std::sort(r.begin(), r.end());
  if (r.empty()) return "no samples";
  return "scatter min " + num(r.front()) + ", median " + num(r[r.size() / 2]) + ", max " + num(r.back());
}

Outcome entropy_method(unsigned threads) {
  bool ok = true;
  std::string detail;
  auto one = [&](GridPtr g, double q, const std::string& label) {
    std::vector<LabSample> scatter;
    LabOptions opts{threads, &scatter};
    const auto cfg = sampler(g, 3);
    const auto k = estimate_K1(cfg, kCoeffs, compute_equilibrium(cfg.masses, g->volume()), q, 10000, opts);
    ok = ok && std::isfinite(k.value) && k.value > 0.0;
    if (!detail.empty()) detail += "; ";
    detail += label + " K1 " + num(k.value) + " (" + scatter_summary(std::move(scatter)) + ")";
  };
  one(make_grid_1d(1.0, 64), entropy_method_q(1), "1D q=1");
  for (double gamma : {0.5, 1.0, 2.0}) {
    one(make_grid_2d(1.0, 1.0, 16, 16), entropy_method_q(2, gamma), "2D q=" + num(1 + gamma));
  }
  return {ok, detail};
}

Outcome ckp(unsigned threads) {
  auto g = make_grid_1d(1.0, 64);
  const auto cfg = sampler(g, 5);
  LabOptions opts{threads, nullptr};
  const auto c = estimate_ckp(cfg, compute_equilibrium(cfg.masses, 1.0), 10000, opts);
  const auto point = ckp_ratio(State::constant(make_grid_1d(1.0, 8), {2, 2, 2, 2}),
                               compute_equilibrium(Masses::from_independent(2, 2, 2), 1.0), MassCheck::skip);
  const double gap = point ? std::abs(*point - (2 * std::log(2.0) - 1)) : INFINITY;
  return {c.value > 0.0 && gap <= 1e-12,
          "C_CKP " + num(c.value) + " (" + c.extremal_token() + "), closed-form point gap " + num(gap)};
}

Outcome strang_order() {
  auto g = make_grid_1d(1.0, 32);
  Stepper stepper(LaplacianStencil(g), kCoeffs, IntegratorConfig{});
  const State s0({Field::from_function(g, [](double x, double) { return 1.0 + 0.5 * std::cos(pi * x); }), Field(g, 1.0),
                  Field(g, 1.0), Field::from_function(g, [](double x, double) { return 1.0 - 0.5 * std::cos(pi * x); })},
                 0.0);
  auto run_n = [&](int n) {
    State s = s0;
    for (int k = 0; k < n; ++k) s = stepper.step(s, 0.2 / n);
    return s;
  };
  auto diff = [](const State& a, const State& b) {
    double m = 0.0;
    for (int k = 0; k < kSpecies; ++k)
      for (std::size_t i = 0; i < a[k].size(); ++i) m = std::max(m, std::abs(a[k][i] - b[k][i]));
    return m;
  };
  const State a = run_n(10), b = run_n(20), c = run_n(40);
  // Richardson: successive differences shrink by 2^p.
  const double p = std::log2(diff(a, b) / diff(b, c));
  const State ref = run_n(1280);
  const double p2 = std::log2(diff(b, ref) / diff(c, ref));
  return {p >= 1.8 && p2 >= 1.8, "observed order " + num(p) + " (Richardson), " + num(p2) + " (fine reference)"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome reproducibility(const std::string& workdir) {
  namespace fs = std::filesystem;
  const fs::path dir = workdir.empty() ? fs::temp_directory_path() / "rxdlab_acceptance" : fs::path(workdir);
  fs::create_directories(dir);
  bool ok = true;
  std::string detail;
  auto check = [&](const std::string& name, const std::string& body, const std::string& artifact_key) {
    std::string outputs[2];
    for (int pass = 0; pass < 2; ++pass) {
      const fs::path artifact = dir / (name + (artifact_key == "csv" ? ".csv" : ".json"));
      const std::string text = body + "[output]\n" + artifact_key + " = " + artifact.string() + "\n";
      std::ostringstream out, err;
      const int code = run(parse_config(text), out, err);
      ok = ok && code == kExitOk;
      outputs[pass] = slurp(artifact);
      fs::remove(artifact);
    }
    const bool same = !outputs[0].empty() && outputs[0] == outputs[1];
    ok = ok && same;
    if (!detail.empty()) detail += "; ";
    detail += name + " " + (same ? "identical" : "DIFFERENT") + " (" + std::to_string(outputs[0].size()) + " bytes)";
  };
  check("simulate",
        "[run]\nmode = simulate\nseed = 9\n[grid]\nnx = 48\n[diffusion]\nd1 = 1\nd2 = 0.5\nd3 = 2\n"
        "[initial]\nkind = sampled\n[masses]\nm13 = 2\nm14 = 2\nm23 = 2\n[integrator]\nt_end = 0.5\n",
        "csv");
  check("lab-beta",
        "[run]\nmode = lab-beta\nseed = 9\n[grid]\nnx = 48\n[diffusion]\nd1 = 1\nd2 = 0.5\nd3 = 2\n"
        "[masses]\nm13 = 2\nm14 = 2\nm23 = 2\n[lab]\nsamples = 500\nthreads = 2\n",
        "report");
  return {ok, detail};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream* progress) {
  std::vector<CriterionResult> results;
  auto record = [&](int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r{id, name, false, "", 0.0};
    try {
      const Outcome o = body();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (progress) *progress << (r.passed ? "  ok   " : "  FAIL ") << id << " " << name << std::endl;
    results.push_back(r);
  };

  record(1, "equilibrium exactness", [] {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = equilibrium_exactness();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.passed = o.passed && secs < 1.0;
    return o;
  });

  LongRun lr;
  double lr_seconds = 0.0;
  record(2, "conservation laws", [&] {
    const auto start = std::chrono::steady_clock::now();
    lr = long_run();
    lr_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return Outcome{lr.finite && lr.steps == 10000 && lr.drift <= 1e-10 && lr_seconds < 10.0,
                   std::to_string(lr.steps) + " steps on 200 cells, max relative drift " + num(lr.drift) + ", " +
                       num(lr_seconds) + " s"};
  });
  record(3, "positivity", [&] {
    return Outcome{lr.finite && lr.steps == 10000 && lr.min_value >= 0.0,
                   "min cell value " + num(lr.min_value) + (lr.finite ? ", all finite" : ", non-finite value")};
  });
  record(4, "heat kernel decay", [] {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = heat_kernel();
    o.passed = o.passed && std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 5.0;
    return o;
  });
  record(5, "entropy dissipation identity", dissipation_identity);

  std::vector<Relaxation> relaxations;
  record(6, "entropy decay and convergence", [&] {
    relaxations.push_back(relax(make_grid_1d(1.0, 128), 20.0, 0.1));
    Outcome o = relaxation_check(relaxations.back(), 60.0);
    if (options.include_2d) {
      relaxations.push_back(relax(make_grid_2d(1.0, 1.0, 64, 64), 20.0, 0.1));
      const Outcome o2 = relaxation_check(relaxations.back(), 600.0);
      o.passed = o.passed && o2.passed;
      o.detail += "; " + o2.detail;
    }
    return o;
  });
  record(7, "ODE limit", ode_limit);
  record(8, "D >= D~", production_bound);
  record(9, "indirect diffusion constant", [&] { return indirect_diffusion(options.threads); });
  record(10, "entropy-method ratio", [&] { return entropy_method(options.threads); });
  record(11, "CKP constant", [&] { return ckp(options.threads); });
  record(12, "u3 stays bounded", [&] {
    if (relaxations.empty()) return Outcome{false, "no relaxation trajectories"};
    Outcome o{true, ""};
    for (const auto& r : relaxations) {
      const Outcome one = u3_bound(r);
      o.passed = o.passed && one.passed;
      o.detail += (o.detail.empty() ? "" : "; ") + one.detail;
    }
    return o;
  });
  record(13, "Strang order", strang_order);
  record(14, "reproducibility", [&] { return reproducibility(options.workdir); });
  return results;
}

void print_acceptance_table(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d  %-30s (%6.2f s)  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.seconds);
    out << head << r.detail << "\n";
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  out << passed << "/" << results.size() << " criteria passed\n";
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return !results.empty() && std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

}  // namespace rxd::cli
