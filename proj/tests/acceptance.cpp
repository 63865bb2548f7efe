// Acceptance suite: one PASS/FAIL line per criterion. With no arguments every
// criterion runs; otherwise only the numbered ones given on the command line.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "stiffpress/config.hpp"
#include "stiffpress/diagnostics.hpp"
#include "stiffpress/elliptic.hpp"
#include "stiffpress/hyperbolic.hpp"
#include "stiffpress/reference.hpp"
#include "stiffpress/run.hpp"
#include "stiffpress/sweep.hpp"

using namespace stiffpress;

namespace {

// Pinned tolerances.
constexpr double kEllipticMaxError = 1e-3;
constexpr double kEllipticRatio = 4.0;
constexpr double kEllipticRatioSlack = 0.2;
constexpr double kMassDrift = 1e-8;
constexpr double kStepClip = 1e-10;
constexpr double kPmeOracle = 1e-9;
constexpr double kHyperbolicOracle = 1e-12;
constexpr double kLimitRatio = 0.5;
constexpr double kEnergyRatio = 0.5;
constexpr double kPressureBoundRel = 1e-12;  // floating-point slack on an exact bound
constexpr double kPressureM20 = 1e-4;
constexpr double kComplementarityRatio = 0.3;
constexpr double kExcessRatio = 0.3;
constexpr double kMuFactor = 10.0;  // tolerance 10 h
constexpr std::size_t kMuErosion = 2;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string list(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
  return s;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

bool non_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] <= v[i - 1])) return false;
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunConfig fig1_to_20() {
  RunConfig cfg = parse_config(fig1_preset());
  cfg.t_final = 20;
  cfg.snapshot_times = {5, 20};
  return cfg;
}

RunConfig fig2_with(double m, double K) {
  RunConfig cfg = parse_config(fig2_preset());
  cfg.params.m = m;
  cfg.params.K = K;
  return cfg;
}

RunResult run_limit(RunConfig cfg) {
  cfg.solver = SolverKind::Hyperbolic;
  return run(cfg, {false});
}

void criterion1(Outcome& out) {
  std::vector<double> errors;
  for (std::size_t n : {50, 100, 200, 400}) {
    const Grid1D g = build_grid(0, 1, n);
    const double pi = std::numbers::pi;
    const Field u = sample(g, [&](double x) { return std::cos(pi * x); });
    const Field c = solve_chemo(u, g);
    double err = 0;
    for (std::size_t i = 0; i < n; ++i)
      err = std::max(err, std::abs(c[i] - std::cos(pi * g.center(i)) / (1 + pi * pi)));
    errors.push_back(err);
  }
  out.detail << "errors(n=50..400)=" << list(errors);
  out.require(errors[2] < kEllipticMaxError, "max error at n=200");
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double ratio = errors[i - 1] / errors[i];
    out.detail << " ratio=" << fmt(ratio);
    out.require(std::abs(ratio - kEllipticRatio) <= kEllipticRatioSlack * kEllipticRatio,
                "halving ratio");
  }
}

void criterion2(Outcome& out) {
  for (double m : {2.0, 5.0, 100.0}) {
    const auto t0 = std::chrono::steady_clock::now();
    RunConfig cfg = fig1_to_20();
    cfg.params.m = m;
    const RunResult r = run(cfg);
    bool bounded = true;
    for (const auto& d : r.diagnostics)
      bounded = bounded && d.u_min >= 0.0 && d.u_max <= r.params.K;
    for (const auto& s : r.snapshots)
      bounded = bounded && min_value(s.state.u) >= 0.0 && max_value(s.state.u) <= r.params.K;
    const double elapsed = seconds_since(t0);
    out.detail << " m=" << m << ": drift=" << fmt(r.max_rel_mass_drift)
               << " clip=" << fmt(r.max_rel_step_clip) << " steps=" << r.totals.steps
               << " time=" << fmt(elapsed) << "s;";
    out.require(r.max_rel_mass_drift <= kMassDrift, "mass drift m=" + fmt(m));
    out.require(bounded, "0 <= u <= K m=" + fmt(m));
    out.require(r.max_rel_step_clip <= kStepClip, "clipped mass m=" + fmt(m));
    out.require(elapsed < 120.0, "runtime m=" + fmt(m));
  }
}

void criterion3(Outcome& out) {
  const Grid1D g = build_grid(0, 1, 8);
  ModelParams p;
  p.m = 5;
  p.K = 1.5;
  p.chi = 20;
  const Field u0 = sample(g, [](double x) { return 0.6 + 0.5 * std::cos(3.0 * x); });

  SimState fast = make_state(0, u0, p, g);
  SimState slow = fast;
  double pme_err = 0;
  for (int k = 0; k < 10; ++k) {
    const double dt = stable_dt(fast, p, g);
    fast = step_pme(fast, p, g, dt).state;
    slow = reference::pme_step(slow, p, g, dt);
    for (std::size_t i = 0; i < g.n_cells; ++i)
      pme_err = std::max(pme_err, std::abs(fast.u[i] - slow.u[i]));
  }

  SimState hf;
  hf.u = u0;
  hf.c = solve_chemo(u0, g);
  hf.P = limit_pressure(u0, p);
  SimState hs = hf;
  double hyp_err = 0;
  for (int k = 0; k < 10; ++k) {
    const double dt = stable_dt(hf, p, g);
    hf = step_hyperbolic(hf, p, g, dt).state;
    hs = reference::hyperbolic_step(hs, p, g, dt);
    for (std::size_t i = 0; i < g.n_cells; ++i)
      hyp_err = std::max(hyp_err, std::abs(hf.u[i] - hs.u[i]));
  }
  out.detail << "pme_vs_dense=" << fmt(pme_err) << " hyperbolic_vs_loop=" << fmt(hyp_err);
  out.require(pme_err <= kPmeOracle, "pme oracle");
  out.require(hyp_err <= kHyperbolicOracle, "hyperbolic oracle");
}

void criterion4(Outcome& out) {
  const RunConfig base = fig1_to_20();
  const RunResult limit = run_limit(base);
  std::vector<double> d5, d20;
  for (double m : {2.0, 5.0, 100.0}) {
    RunConfig cfg = base;
    cfg.params.m = m;
    const RunResult r = run(cfg, {false});
    const auto d = compare_to_limit(r.states(), limit.states(), r.grid, cfg.params.K);
    d5.push_back(d[0]);
    d20.push_back(d[1]);
  }
  out.detail << "L1(t=5)=" << list(d5) << " L1(t=20)=" << list(d20);
  out.require(strictly_decreasing(d5) && strictly_decreasing(d20), "strict decrease");
  out.require(d5.back() <= kLimitRatio * d5.front() && d20.back() <= kLimitRatio * d20.front(),
              "m=100 vs m=2 ratio");
}

std::vector<SweepRow> criterion5_sweep(unsigned threads) {
  const RunConfig base = parse_config(fig2_preset());
  const double m[] = {2, 5, 20, 100};
  const double K[] = {0.6, 1.0};
  SweepOptions opts;
  opts.threads = threads;
  return run_sweep(base, m, K, opts);
}

void criterion5(Outcome& out) {
  const auto rows = criterion5_sweep(0);
  const double t_end = parse_config(fig2_preset()).t_final;
  std::vector<double> energy;
  bool all_ok = true;
  bool bounded = true;
  double p_m20 = -1;
  for (const auto& r : rows) {
    all_ok = all_ok && r.ok;
    if (r.K == 1.0 && r.t == t_end) energy.push_back(r.grad_P_energy);
    if (r.K == 0.6) {
      ModelParams p;
      p.m = r.m;
      p.K = r.K;
      const double bound = pressure_sup_bound(p);
      bounded = bounded && r.max_P <= bound * (1 + kPressureBoundRel);
      if (r.m == 20) p_m20 = std::max(p_m20, r.max_P);
    }
  }
  out.detail << "grad_P_energy(K=1,m=2,5,20,100)=" << list(energy) << " max_P(K=0.6,m=20)="
             << fmt(p_m20);
  out.require(all_ok, "sweep rows ok");
  out.require(energy.size() == 4 && non_increasing(energy), "energy non-increasing");
  out.require(energy.size() == 4 && energy.back() <= kEnergyRatio * energy.front(),
              "m=100 vs m=2 energy");
  out.require(bounded, "K=0.6 pressure bound");
  out.require(p_m20 >= 0 && p_m20 < kPressureM20, "K=0.6 m=20 pressure below 1e-4");
}

void criterion6(Outcome& out) {
  std::vector<double> res;
  for (double m : {5.0, 20.0, 100.0}) {
    const RunResult r = run(fig2_with(m, 2.0), {false});
    const SimState& s = r.snapshots.back().state;
    res.push_back(complementarity_residual(s, r.params, r.grid).l1);
  }
  out.detail << "residual(t=5,m=5,20,100)=" << list(res);
  out.require(strictly_decreasing(res), "decrease");
  out.require(res.back() <= kComplementarityRatio * res.front(), "m=100 vs m=5 ratio");
}

void criterion7(Outcome& out) {
  std::vector<double> e;
  for (double m : {4.0, 8.0, 16.0, 32.0})
    e.push_back(std::sqrt(run(fig2_with(m, 2.0), {false}).totals.excess_sat_sq));
  out.detail << "E(m=4,8,16,32)=" << list(e);
  out.require(non_increasing(e), "non-increasing");
  out.require(e.back() <= kExcessRatio * e.front(), "E(32) vs E(4) ratio");
}

void criterion8(Outcome& out) {
  RunConfig base = parse_config(fig1_preset());
  base.t_final = 5;
  base.snapshot_times = {0, 5};
  const KineticGrid windowed = make_kinetic_grid(base.params.K);
  const KineticGrid raw = make_kinetic_grid(base.params.K, 64, 0.05, 1);
  std::vector<double> metric;
  double raw_max = 0;
  for (double m : {2.0, 5.0, 100.0}) {
    RunConfig cfg = base;
    cfg.params.m = m;
    const RunResult r = run(cfg, {false});
    for (const auto& s : r.snapshots)
      raw_max = std::max(raw_max, kinetic_two_valued_metric(s.state.u, r.grid, raw));
    metric.push_back(kinetic_two_valued_metric(r.snapshots.back().state.u, r.grid, windowed));
  }
  out.detail << "windowed(t=5,m=2,5,100)=" << list(metric) << " raw_max=" << fmt(raw_max);
  out.require(strictly_decreasing(metric), "windowed metric decreasing");
  out.require(raw_max == 0.0, "raw metric zero");
}

void criterion9(Outcome& out) {
  RunConfig cfg = fig2_with(100.0, 2.0);
  cfg.n_cells = 400;
  cfg.snapshot_times = {cfg.t_final};
  const RunResult r = run(cfg, {false});
  const SimState& s = r.snapshots.back().state;
  const MuProfile mu = mu_profile(s, r.params, r.grid);
  const auto interior = erode(mu.saturated, kMuErosion);
  double interior_max = 0;
  double support_min = 0;
  std::size_t interior_cells = 0;
  for (std::size_t i = 0; i < r.grid.n_cells; ++i) {
    if (interior[i] && mu.support[i]) {
      interior_max = std::max(interior_max, std::abs(mu.mu[i]));
      ++interior_cells;
    }
    if (mu.support[i]) support_min = std::min(support_min, mu.mu[i]);
  }
  const double tol = kMuFactor * r.grid.h;
  out.detail << "tol=" << fmt(tol) << " max|mu|(interior," << interior_cells
             << " cells)=" << fmt(interior_max) << " min mu(support)=" << fmt(support_min);
  out.require(interior_cells > 0, "non-empty saturated interior");
  out.require(interior_max <= tol, "interior |mu|");
  out.require(support_min >= -tol, "mu non-negative on support");
}

void criterion10(Outcome& out) {
  auto csv_with_env = [](const char* threads) {
    setenv("STIFFPRESS_THREADS", threads, 1);
    return sweep_csv(criterion5_sweep(0));
  };
  const std::string serial = csv_with_env("1");
  const std::string parallel = csv_with_env("4");
  const std::string repeat = csv_with_env("4");
  unsetenv("STIFFPRESS_THREADS");
  out.detail << "bytes=" << serial.size();
  out.require(serial == parallel, "STIFFPRESS_THREADS=1 vs 4");
  out.require(parallel == repeat, "repeat");
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "elliptic accuracy", 1, criterion1},
      {2, "conservation and bounds", 360, criterion2},
      {3, "oracle equivalence", 1, criterion3},
      {4, "incompressible-limit trend", 300, criterion4},
      {5, "stiff-pressure vanishing", 300, criterion5},
      {6, "complementarity", 300, criterion6},
      {7, "excess saturation rate", 300, criterion7},
      {8, "kinetic two-valuedness", 120, criterion8},
      {9, "saturated-zone mu profile", 120, criterion9},
      {10, "sweep determinism", 900, criterion10},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
      continue;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    out.require(elapsed < c.budget_s, "runtime budget " + fmt(c.budget_s) + "s");
    std::printf("criterion %d (%s): %s  %s  [%.2fs]\n", c.id, c.name, out.pass ? "PASS" : "FAIL",
                out.detail.str().c_str(), elapsed);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
