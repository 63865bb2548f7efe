#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stiffpress/diagnostics.hpp"
#include "stiffpress/grid.hpp"
#include "stiffpress/pme.hpp"

namespace stiffpress {

/// 17 significant digits.
std::string format_real(double v);

/// Shortest rendering that round-trips, for file and directory names.
std::string format_short(double v);

/// `snap_t<time>.csv` with the shortest round-trip rendering of the time.
std::string snapshot_filename(double t);

/// Header `x,u,c,P,gradP`; gradP is the mean of the two adjacent face gradients.
std::string snapshot_csv(const SimState& s, const Grid1D& g);

struct SnapshotTable {
  std::vector<double> x, u, c, P, gradP;
};

/// Parses a snapshot CSV (columns located by header name; only x and u are
/// required). Throws InputError on malformed content.
SnapshotTable parse_snapshot_csv(std::string_view text);

std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace stiffpress
