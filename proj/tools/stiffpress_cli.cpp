// Command-line front end: simulate, limit, sweep, diagnose, selftest.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <iostream>

#include "stiffpress/config.hpp"
#include "stiffpress/diagnostics.hpp"
#include "stiffpress/elliptic.hpp"
#include "stiffpress/errors.hpp"
#include "stiffpress/hyperbolic.hpp"
#include "stiffpress/io.hpp"
#include "stiffpress/run.hpp"
#include "stiffpress/selftest.hpp"
#include "stiffpress/sweep.hpp"

namespace fs = std::filesystem;
using namespace stiffpress;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

RunConfig load(const std::string& path) {
  RunConfig cfg = load_config(path);
  for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << '\n';
  return cfg;
}

int simulate(const std::string& path, SolverKind solver) {
  RunConfig cfg = load(path);
  cfg.solver = solver;
  const RunResult res = run(cfg);
  const fs::path dir = cfg.output_dir;
  for (const Snapshot& snap : res.snapshots) {
    write_text(dir / snapshot_filename(snap.state.t), snapshot_csv(snap.state, res.grid));
  }
  write_text(dir / "diagnostics.csv", diagnostics_csv(res.diagnostics));
  std::cout << to_string(solver) << ": " << res.totals.steps << " steps, "
            << res.snapshots.size() << " snapshots in " << dir.string() << '\n'
            << "relative mass drift " << res.max_rel_mass_drift << ", max per-step clipped mass "
            << res.max_rel_step_clip << ", rejected steps " << res.rejected_steps << '\n';
  return 0;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw ConfigError(std::string(what) + ": malformed list '" + text + "'", what);
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ConfigError(std::string(what) + ": empty list", what);
  return out;
}

int sweep(const std::string& path, const std::string& m_text, const std::string& k_text,
          unsigned threads) {
  const RunConfig cfg = load(path);
  const auto ms = parse_list(m_text, "m");
  const auto ks = parse_list(k_text, "K");
  for (double K : ks) {
    RunConfig probe = cfg;
    probe.params.K = K;
    for (double m : ms) {
      probe.params.m = m;
      validate_config(probe);
    }
  }
  const auto rows = run_sweep(cfg, ms, ks, SweepOptions{threads, true});
  const fs::path out = fs::path(cfg.output_dir) / "sweep.csv";
  write_text(out, sweep_csv(rows));
  bool failed = false;
  for (const auto& r : rows) {
    if (!r.ok) {
      failed = true;
      std::cerr << "row m=" << r.m << " K=" << r.K << " t=" << r.t << " failed: " << r.error << '\n';
    }
  }
  std::cout << rows.size() << " rows written to " << out.string() << '\n';
  return failed ? kExitNumerical : 0;
}

int diagnose(const std::string& snapshot_path, const std::string& config_path) {
  const RunConfig cfg = load(config_path);
  const Grid1D g = cfg.grid();
  const SnapshotTable table = parse_snapshot_csv(read_text(snapshot_path));
  if (table.u.size() != g.n_cells) {
    throw InputError("snapshot has " + std::to_string(table.u.size()) + " cells, config has " +
                     std::to_string(g.n_cells));
  }
  double t = 0.0;
  const std::string stem = fs::path(snapshot_path).stem().string();
  if (stem.rfind("snap_t", 0) == 0) {
    const std::string_view tv = std::string_view(stem).substr(6);
    std::from_chars(tv.data(), tv.data() + tv.size(), t);
  }
  const ModelParams& p = cfg.params;
  Field u(table.u);
  SimState s;
  s.t = t;
  s.c = solve_chemo(u, g);
  s.P = cfg.solver == SolverKind::Hyperbolic ? limit_pressure(u, p) : compute_pressure(u, p.m);
  s.u = std::move(u);

  const DiagnosticsRecord rec = record_diagnostics(s, p, g, 0.0);
  const MuProfile mu = mu_profile(s, p, g);
  const auto interior = erode(mu.saturated, 2);
  double mu_min = 0.0, mu_interior = 0.0;
  std::size_t support = 0, saturated = 0;
  for (std::size_t i = 0; i < g.n_cells; ++i) {
    if (mu.support[i]) {
      mu_min = support == 0 ? mu.mu[i] : std::min(mu_min, mu.mu[i]);
      ++support;
    }
    if (mu.saturated[i]) ++saturated;
    if (interior[i] && mu.support[i]) mu_interior = std::max(mu_interior, std::abs(mu.mu[i]));
  }

  auto line = [](const char* key, double v) { std::cout << key << '=' << format_real(v) << '\n'; };
  line("t", rec.t);
  line("mass", rec.mass);
  line("u_min", rec.u_min);
  line("u_max", rec.u_max);
  line("comp_residual_l1", rec.comp_residual_l1);
  line("sat_product_P", rec.sat_product_P);
  line("sat_product_gradP", rec.sat_product_gradP);
  line("max_P", max_value(s.P));
  line("kinetic_metric", kinetic_two_valued_metric(s.u, g, make_kinetic_grid(p.K)));
  line("pressure_support_cells", static_cast<double>(support));
  line("saturated_cells", static_cast<double>(saturated));
  line("mu_min_on_support", mu_min);
  line("mu_max_abs_saturated_interior", mu_interior);
  std::cout << "mu_degenerate=" << (mu.degenerate ? "true" : "false") << '\n';
  if (p.K < 1.0) line("pressure_sup_bound", pressure_sup_bound(p));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Porous-medium Keller-Segel simulator with incompressible-limit diagnostics"};
  app.require_subcommand(1);

  std::string config, snapshot, m_list, k_list;
  unsigned threads = 0;

  auto* sim = app.add_subcommand("simulate", "Run the porous-medium solver");
  sim->add_option("config", config, "Configuration file")->required();
  auto* lim = app.add_subcommand("limit", "Run the hyperbolic limit solver");
  lim->add_option("config", config, "Configuration file")->required();
  auto* swp = app.add_subcommand("sweep", "Run an (m, K) sweep and write sweep.csv");
  swp->add_option("config", config, "Base configuration file")->required();
  swp->add_option("--m", m_list, "Comma-separated diffusion exponents")->required();
  swp->add_option("--K", k_list, "Comma-separated capacities")->required();
  swp->add_option("--threads", threads, "Worker threads (default: STIFFPRESS_THREADS)");
  auto* dia = app.add_subcommand("diagnose", "Evaluate diagnostics on a snapshot CSV");
  dia->add_option("snapshot", snapshot, "Snapshot CSV")->required();
  dia->add_option("config", config, "Configuration file")->required();
  auto* st = app.add_subcommand("selftest", "Run the built-in checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*sim) return simulate(config, SolverKind::Pme);
    if (*lim) return simulate(config, SolverKind::Hyperbolic);
    if (*swp) return sweep(config, m_list, k_list, threads);
    if (*dia) return diagnose(snapshot, config);
    if (*st) {
      const SelfTestReport report = selftest();
      std::cout << report.text();
      return report.ok() ? 0 : kExitNumerical;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
