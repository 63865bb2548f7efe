#include "stiffpress/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <thread>

#include "stiffpress/errors.hpp"
#include "stiffpress/io.hpp"

namespace stiffpress {

std::vector<double> compare_to_limit(const std::vector<SimState>& snaps,
                                     const std::vector<SimState>& limit, const Grid1D& g,
                                     double K) {
  if (K > 1.0) throw UsageError("compare_to_limit: no hyperbolic reference for K > 1");
  if (snaps.size() != limit.size()) throw UsageError("compare_to_limit: snapshot count mismatch");
  std::vector<double> out;
  out.reserve(snaps.size());
  for (std::size_t k = 0; k < snaps.size(); ++k) {
    if (snaps[k].t != limit[k].t) throw UsageError("compare_to_limit: snapshot times differ");
    if (snaps[k].u.size() != g.n_cells || limit[k].u.size() != g.n_cells) {
      throw UsageError("compare_to_limit: snapshots do not live on the grid");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < g.n_cells; ++i) d += std::abs(snaps[k].u[i] - limit[k].u[i]);
    out.push_back(d * g.h);
  }
  return out;
}

unsigned threads_from_env() {
  if (const char* env = std::getenv("STIFFPRESS_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Job {
  RunConfig cfg;
  std::optional<RunResult> result;
  std::string error;
};

void run_jobs(std::vector<Job>& jobs, unsigned threads) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        jobs[k].result = run(jobs[k].cfg, RunOptions{.keep_diagnostics = false});
      } catch (const std::exception& e) {
        jobs[k].error = e.what();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

std::string run_dir(double m, double K) {
  return "m" + format_short(m) + "_K" + format_short(K);
}

}  // namespace

std::vector<SweepRow> run_sweep(const RunConfig& base, std::span<const double> m_list,
                                std::span<const double> k_list, const SweepOptions& opts) {
  std::vector<double> ms(m_list.begin(), m_list.end());
  std::vector<double> ks(k_list.begin(), k_list.end());
  std::sort(ms.begin(), ms.end());
  std::sort(ks.begin(), ks.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  std::vector<Job> jobs;
  std::map<std::pair<double, double>, std::size_t> pme_job;
  std::map<double, std::size_t> limit_job;
  for (double K : ks) {
    for (double m : ms) {
      Job job{base, std::nullopt, {}};
      job.cfg.params.m = m;
      job.cfg.params.K = K;
      job.cfg.solver = SolverKind::Pme;
      pme_job[{m, K}] = jobs.size();
      jobs.push_back(std::move(job));
    }
    if (K <= 1.0) {
      Job job{base, std::nullopt, {}};
      job.cfg.params.K = K;
      job.cfg.solver = SolverKind::Hyperbolic;
      limit_job[K] = jobs.size();
      jobs.push_back(std::move(job));
    }
  }
  run_jobs(jobs, opts.threads ? opts.threads : threads_from_env());

  std::vector<SweepRow> rows;
  for (double m : ms) {
    for (double K : ks) {
      const Job& job = jobs[pme_job.at({m, K})];
      const Job* limit = K <= 1.0 ? &jobs[limit_job.at(K)] : nullptr;

      std::string error = job.error;
      if (error.empty() && limit && !limit->result) error = "limit run failed: " + limit->error;
      if (!error.empty()) {
        for (double t : base.snapshot_times) {
          SweepRow row;
          row.m = m;
          row.K = K;
          row.t = t;
          row.ok = false;
          row.error = error;
          rows.push_back(row);
        }
        continue;
      }

      const RunResult& res = *job.result;
      std::vector<double> dist(res.snapshots.size(), 0.0);
      if (limit) dist = compare_to_limit(res.states(), limit->result->states(), res.grid, K);
      const KineticGrid kg = make_kinetic_grid(K);
      for (std::size_t k = 0; k < res.snapshots.size(); ++k) {
        const Snapshot& snap = res.snapshots[k];
        SweepRow row;
        row.m = m;
        row.K = K;
        row.t = snap.state.t;
        row.l1_dist_to_limit = dist[k];
        row.grad_P_energy = snap.totals.grad_P_energy;
        row.comp_residual_l1 = complementarity_residual(snap.state, res.params, res.grid).l1;
        row.excess_sat_total = std::sqrt(snap.totals.excess_sat_sq);
        row.max_P = snap.totals.max_P;
        row.kinetic_metric = kinetic_two_valued_metric(snap.state.u, res.grid, kg);
        if (K < 1.0 && row.max_P > pressure_sup_bound(res.params)) {
          row.ok = false;
          row.error = "max pressure exceeds m/(m-1) K^(m-1)";
        }
        rows.push_back(row);
      }
      if (opts.write_outputs) {
        const auto dir = std::filesystem::path(base.output_dir) / run_dir(m, K);
        for (const Snapshot& snap : res.snapshots) {
          write_text(dir / snapshot_filename(snap.state.t), snapshot_csv(snap.state, res.grid));
        }
      }
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "m,K,t,l1_dist_to_limit,grad_P_energy,comp_residual_l1,excess_sat_total,max_P,"
      "kinetic_metric,status\n";
  for (const SweepRow& r : rows) {
    for (double v : {r.m, r.K, r.t, r.l1_dist_to_limit, r.grad_P_energy, r.comp_residual_l1,
                     r.excess_sat_total, r.max_P, r.kinetic_metric}) {
      out += format_real(v);
      out += ',';
    }
    out += r.ok ? "ok" : "failed";
    out += '\n';
  }
  return out;
}

}  // namespace stiffpress
