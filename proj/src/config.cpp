#include "stiffpress/config.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "stiffpress/errors.hpp"
#include "stiffpress/io.hpp"

namespace stiffpress {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view value) {
  value = trim(value);
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw ConfigError(std::string(key) + ": malformed number '" + std::string(value) + "'",
                      std::string(key));
  }
  return out;
}

long parse_integer(std::string_view key, std::string_view value) {
  value = trim(value);
  long out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(key) + ": malformed integer '" + std::string(value) + "'",
                      std::string(key));
  }
  return out;
}

std::vector<double> parse_list(std::string_view key, std::string_view value) {
  std::vector<double> out;
  while (true) {
    const auto comma = value.find(',');
    out.push_back(parse_real(key, value.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ConfigError(key + ": " + what, key);
}

}  // namespace

const char* to_string(SolverKind s) { return s == SolverKind::Pme ? "pme" : "hyperbolic"; }

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  RunConfig cfg;
  bool have_snapshots = false;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) fail(key, "duplicate key");

    if (key == "x_min") cfg.x_min = parse_real(key, value);
    else if (key == "x_max") cfg.x_max = parse_real(key, value);
    else if (key == "n_cells") {
      const long n = parse_integer(key, value);
      if (n < 2) fail(key, "must be >= 2");
      cfg.n_cells = static_cast<std::size_t>(n);
    }
    else if (key == "m") cfg.params.m = parse_real(key, value);
    else if (key == "K") cfg.params.K = parse_real(key, value);
    else if (key == "chi") cfg.params.chi = parse_real(key, value);
    else if (key == "D") cfg.params.D = parse_real(key, value);
    else if (key == "cfl") cfg.params.cfl = parse_real(key, value);
    else if (key == "dt_max_cap") cfg.params.dt_max_cap = parse_real(key, value);
    else if (key == "newton_tol") cfg.params.newton_tol = parse_real(key, value);
    else if (key == "newton_max_iter") cfg.params.newton_max_iter = static_cast<int>(parse_integer(key, value));
    else if (key == "max_halvings") cfg.params.max_halvings = static_cast<int>(parse_integer(key, value));
    else if (key == "t_final") cfg.t_final = parse_real(key, value);
    else if (key == "snapshot_times") {
      cfg.snapshot_times = parse_list(key, value);
      have_snapshots = true;
    }
    else if (key == "init") {
      if (value == "cosine") cfg.init.kind = InitKind::Cosine;
      else if (value == "step") cfg.init.kind = InitKind::Step;
      else if (value == "csv") cfg.init.kind = InitKind::Csv;
      else fail(key, "expected cosine, step or csv");
    }
    else if (key == "init_M") cfg.init.M = parse_real(key, value);
    else if (key == "init_amp") cfg.init.amplitude = parse_real(key, value);
    else if (key == "init_left") cfg.init.left = parse_real(key, value);
    else if (key == "init_right") cfg.init.right = parse_real(key, value);
    else if (key == "init_split") cfg.init.split = parse_real(key, value);
    else if (key == "init_path") {
      std::filesystem::path path{std::string(value)};
      if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
      cfg.init.path = path.string();
    }
    else if (key == "output_dir") cfg.output_dir = std::string(value);
    else if (key == "solver") {
      if (value == "pme") cfg.solver = SolverKind::Pme;
      else if (value == "hyperbolic") cfg.solver = SolverKind::Hyperbolic;
      else fail(key, "expected pme or hyperbolic");
    }
    else fail(key, "unknown key");
  }

  if (!have_snapshots) cfg.snapshot_times = {cfg.t_final};
  validate_config(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_text(path), path.parent_path());
}

void validate_config(RunConfig& cfg) {
  cfg.warnings.clear();
  const Grid1D g = cfg.grid();
  cfg.params.validate();

  if (!std::isfinite(cfg.t_final) || cfg.t_final < 0.0) fail("t_final", "must be >= 0");
  if (cfg.snapshot_times.empty()) fail("snapshot_times", "must not be empty");
  for (std::size_t i = 0; i < cfg.snapshot_times.size(); ++i) {
    const double t = cfg.snapshot_times[i];
    if (t < 0.0 || t > cfg.t_final) fail("snapshot_times", "times must lie in [0, t_final]");
    if (i > 0 && !(t > cfg.snapshot_times[i - 1])) fail("snapshot_times", "must be strictly increasing");
  }
  if (cfg.init.kind == InitKind::Csv && cfg.init.path.empty()) fail("init_path", "required for init=csv");

  const Field u0 = initial_density(cfg, g);
  const double lo = min_value(u0);
  const double hi = max_value(u0);
  if (lo < 0.0 || hi > cfg.params.K) {
    fail("init", "initial density must satisfy 0 <= u0 <= K (range [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "])");
  }
  const double mean = integral(u0, g) / g.length();
  if (mean >= 1.0) {
    cfg.warnings.push_back("mean initial density " + std::to_string(mean) +
                           " >= 1: the L1 smallness assumption ||u0||_1 <= alpha |Omega|, alpha < 1, "
                           "does not hold");
  }
}

Field initial_density(const RunConfig& cfg, const Grid1D& g) {
  const InitPreset& init = cfg.init;
  switch (init.kind) {
    case InitKind::Cosine:
      return sample(g, [&](double x) {
        return init.M - init.amplitude * std::cos(std::numbers::pi * (x - g.x_min) / g.length());
      });
    case InitKind::Step:
      return sample(g, [&](double x) { return x < init.split ? init.left : init.right; });
    case InitKind::Csv: {
      SnapshotTable table;
      try {
        table = parse_snapshot_csv(read_text(init.path));
      } catch (const std::exception& e) {
        fail("init_path", e.what());
      }
      if (table.u.size() != g.n_cells) {
        fail("init_path", "expected " + std::to_string(g.n_cells) + " rows, found " +
                              std::to_string(table.u.size()));
      }
      return Field(table.u);
    }
  }
  fail("init", "unhandled kind");
}

std::string_view fig1_preset() {
  return "# Figure 1: aggregation towards the hyperbolic limit at capacity K = 1\n"
         "x_min=0\n"
         "x_max=1\n"
         "n_cells=200\n"
         "m=100\n"
         "K=1\n"
         "chi=40\n"
         "D=1\n"
         "t_final=1000\n"
         "snapshot_times=0,5,20,1000\n"
         "init=cosine\n"
         "init_M=0.5\n"
         "init_amp=0.01\n"
         "output_dir=out/fig1\n"
         "solver=pme\n";
}

std::string_view fig2_preset() {
  return "# Figure 2: pressure profiles for K in {0.6, 1, 2}\n"
         "x_min=0\n"
         "x_max=1\n"
         "n_cells=200\n"
         "m=20\n"
         "K=2\n"
         "chi=80\n"
         "D=1\n"
         "t_final=5\n"
         "snapshot_times=1,5\n"
         "init=cosine\n"
         "init_M=0.5\n"
         "init_amp=0.01\n"
         "output_dir=out/fig2\n"
         "solver=pme\n";
}

}  // namespace stiffpress
