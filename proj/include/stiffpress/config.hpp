#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stiffpress/grid.hpp"
#include "stiffpress/pme.hpp"

namespace stiffpress {

enum class InitKind { Cosine, Step, Csv };
enum class SolverKind { Pme, Hyperbolic };

/// Initial density: cosine M - amp*cos(pi (x-x_min)/L), a step
/// (left for x < split, right otherwise), or per-cell values from a CSV file.
struct InitPreset {
  InitKind kind = InitKind::Cosine;
  double M = 0.5;
  double amplitude = 0.01;
  double left = 0.0;
  double right = 0.0;
  double split = 0.5;
  std::string path;
};

struct RunConfig {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n_cells = 200;
  ModelParams params;
  double t_final = 1.0;
  std::vector<double> snapshot_times;  // increasing, within [0, t_final]
  InitPreset init;
  std::string output_dir = "out";
  SolverKind solver = SolverKind::Pme;
  std::vector<std::string> warnings;

  Grid1D grid() const { return build_grid(x_min, x_max, n_cells); }
};

/// Parses `key=value` lines (`#` starts a comment). Omitted keys keep their
/// defaults; an omitted snapshot_times becomes {t_final}. Throws ConfigError
/// naming the key on unknown keys, malformed values or invariant violations.
/// A relative init_path is resolved against `base_dir` when one is given.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// Re-checks every invariant after programmatic edits and refreshes warnings.
void validate_config(RunConfig& cfg);

Field initial_density(const RunConfig& cfg, const Grid1D& g);

/// Built-in documents for the two published experiments.
std::string_view fig1_preset();
std::string_view fig2_preset();

const char* to_string(SolverKind s);

}  // namespace stiffpress
