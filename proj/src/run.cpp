#include "stiffpress/run.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stiffpress/elliptic.hpp"
#include "stiffpress/errors.hpp"
#include "stiffpress/hyperbolic.hpp"

namespace stiffpress {

std::vector<SimState> RunResult::states() const {
  std::vector<SimState> out;
  out.reserve(snapshots.size());
  for (const auto& s : snapshots) out.push_back(s.state);
  return out;
}

namespace {

using Stepper = StepReport (*)(const SimState&, const ModelParams&, const Grid1D&, double);

// m (u-1)_+ <= u^m holds for u >= 0; a violation means the state is corrupt.
void check_convexity_bound(const SimState& s, const ModelParams& p) {
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    const double u = s.u[i];
    const double lhs = p.m * std::max(u - 1.0, 0.0);
    const double rhs = std::pow(u, p.m);
    if (lhs > rhs * (1.0 + 1e-12)) {
      throw InvariantError("convexity bound m(u-1)_+ <= u^m violated at t=" + std::to_string(s.t));
    }
  }
}

std::string dump(const SimState& s, const Grid1D& g, double dt, const std::string& why) {
  std::ostringstream out;
  out << "run failed at t=" << s.t << " (last dt=" << dt << "): " << why
      << " | mass=" << integral(s.u, g) << " u_min=" << min_value(s.u)
      << " u_max=" << max_value(s.u) << " max_P=" << max_value(s.P);
  return out.str();
}

RunResult integrate(const RunConfig& cfg, const RunOptions& opts, SolverKind kind,
                    Stepper step) {
  RunConfig checked = cfg;
  validate_config(checked);
  const Grid1D g = checked.grid();
  const ModelParams& p = checked.params;

  RunResult result;
  result.grid = g;
  result.params = p;
  result.solver = kind;

  Field u0 = initial_density(checked, g);
  SimState s;
  if (kind == SolverKind::Pme) {
    s = make_state(0.0, std::move(u0), p, g);
  } else {
    s.c = solve_chemo(u0, g);
    s.P = limit_pressure(u0, p);
    s.u = std::move(u0);
  }
  result.initial_mass = integral(s.u, g);
  RunningTotals totals;
  totals.max_P = max_value(s.P);

  auto take_snapshot = [&] {
    if (kind == SolverKind::Pme) check_convexity_bound(s, p);
    result.snapshots.push_back({s, totals});
  };

  // Every snapshot time is a landing point; t_final is one too.
  std::vector<std::pair<double, bool>> targets;
  for (double t : checked.snapshot_times) targets.emplace_back(t, true);
  if (targets.back().first < checked.t_final) targets.emplace_back(checked.t_final, false);

  const double mass_scale = std::max(result.initial_mass, 1e-300);
  double dt = 0.0;
  for (const auto& [target, is_snapshot] : targets) {
    while (s.t < target) {
      dt = stable_dt(s, p, g);
      bool lands = false;
      if (target - s.t <= dt) {
        dt = target - s.t;
        lands = true;
      }
      StepReport report;
      for (int halvings = 0;; ++halvings) {
        try {
          report = step(s, p, g, dt);
          break;
        } catch (const StepRejected& e) {
          ++result.rejected_steps;
          if (halvings >= p.max_halvings) throw NumericalError(dump(s, g, dt, e.what()));
          dt *= 0.5;
          lands = false;
        }
      }

      const DiagnosticsRecord rec = record_diagnostics(s, p, g, dt);
      totals.grad_P_energy += rec.grad_P_energy_increment;
      totals.excess_sat_sq += rec.excess_sat_l2_sq_increment;
      totals.defect += rec.defect_increment;
      if (opts.keep_diagnostics) result.diagnostics.push_back(rec);

      s = std::move(report.state);
      if (lands) s.t = target;
      ++totals.steps;
      totals.clipped_mass += report.clipped_mass;
      totals.max_P = std::max(totals.max_P, max_value(s.P));
      result.max_rel_step_clip = std::max(result.max_rel_step_clip, report.clipped_mass / mass_scale);

      if (min_value(s.u) < 0.0 || max_value(s.u) > p.K || !all_finite(s.u)) {
        throw NumericalError(dump(s, g, dt, "density left [0, K]"));
      }
      const double drift = std::abs(integral(s.u, g) - result.initial_mass) / mass_scale;
      result.max_rel_mass_drift = std::max(result.max_rel_mass_drift, drift);
    }
    if (is_snapshot) take_snapshot();
  }
  result.totals = totals;
  return result;
}

}  // namespace

RunResult run_pme(const RunConfig& cfg, const RunOptions& opts) {
  return integrate(cfg, opts, SolverKind::Pme, &step_pme);
}

RunResult run_hyperbolic(const RunConfig& cfg, const RunOptions& opts) {
  return integrate(cfg, opts, SolverKind::Hyperbolic, &step_hyperbolic);
}

RunResult run(const RunConfig& cfg, const RunOptions& opts) {
  return cfg.solver == SolverKind::Pme ? run_pme(cfg, opts) : run_hyperbolic(cfg, opts);
}

}  // namespace stiffpress
