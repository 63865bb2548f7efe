#pragma once

#include <cstddef>
#include <vector>

#include "stiffpress/config.hpp"
#include "stiffpress/diagnostics.hpp"

namespace stiffpress {

/// Space-time accumulators, left-endpoint rule in time.
struct RunningTotals {
  double grad_P_energy = 0.0;  // int int |d_x P|^2
  double excess_sat_sq = 0.0;  // int int ((u-1)_+)^2
  double defect = 0.0;         // int int d_x u d_x u^m
  double max_P = 0.0;          // max over x and elapsed t
  double clipped_mass = 0.0;
  std::size_t steps = 0;
};

struct Snapshot {
  SimState state;
  RunningTotals totals;  // accumulated up to state.t
};

struct RunOptions {
  bool keep_diagnostics = true;
};

struct RunResult {
  Grid1D grid;
  ModelParams params;
  SolverKind solver = SolverKind::Pme;
  std::vector<Snapshot> snapshots;
  std::vector<DiagnosticsRecord> diagnostics;
  RunningTotals totals;
  double initial_mass = 0.0;
  double max_rel_mass_drift = 0.0;
  double max_rel_step_clip = 0.0;  // per-step clipped mass / initial mass
  std::size_t rejected_steps = 0;

  std::vector<SimState> states() const;
};

/// Integrates from t = 0 to t_final, landing exactly on every snapshot time.
/// Rejected steps are retried with dt/2 up to max_halvings times, after which
/// a NumericalError describing the state is thrown.
RunResult run_pme(const RunConfig& cfg, const RunOptions& opts = {});
RunResult run_hyperbolic(const RunConfig& cfg, const RunOptions& opts = {});
RunResult run(const RunConfig& cfg, const RunOptions& opts = {});

}  // namespace stiffpress
