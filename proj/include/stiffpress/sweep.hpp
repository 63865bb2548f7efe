#pragma once

#include <span>
#include <string>
#include <vector>

#include "stiffpress/config.hpp"
#include "stiffpress/run.hpp"

namespace stiffpress {

struct SweepRow {
  double m = 0.0;
  double K = 0.0;
  double t = 0.0;
  double l1_dist_to_limit = 0.0;  // K <= 1 only, 0 otherwise
  double grad_P_energy = 0.0;
  double comp_residual_l1 = 0.0;
  double excess_sat_total = 0.0;
  double max_P = 0.0;
  double kinetic_metric = 0.0;
  bool ok = true;
  std::string error;
};

/// L1 distance per snapshot time. Throws UsageError on mismatched grids or
/// times, and when K > 1 (no limit reference exists there).
std::vector<double> compare_to_limit(const std::vector<SimState>& snaps,
                                     const std::vector<SimState>& limit, const Grid1D& g,
                                     double K);

struct SweepOptions {
  unsigned threads = 0;  // 0: STIFFPRESS_THREADS, else hardware concurrency
  bool write_outputs = false;  // per-row snapshot files under output_dir
};

/// One row per (m, K, snapshot time), sorted by (m, K, t). Failed runs yield
/// rows with ok = false instead of aborting the sweep.
std::vector<SweepRow> run_sweep(const RunConfig& base, std::span<const double> m_list,
                                std::span<const double> k_list, const SweepOptions& opts = {});

std::string sweep_csv(const std::vector<SweepRow>& rows);

unsigned threads_from_env();

}  // namespace stiffpress
