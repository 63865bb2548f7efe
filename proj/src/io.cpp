#include "stiffpress/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "stiffpress/errors.hpp"

namespace stiffpress {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_short(double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string snapshot_filename(double t) { return "snap_t" + format_short(t) + ".csv"; }

std::string snapshot_csv(const SimState& s, const Grid1D& g) {
  check_shape(s.u, g);
  const FaceField gP = face_gradient(s.P, g);
  std::string out = "x,u,c,P,gradP\n";
  for (std::size_t i = 0; i < g.n_cells; ++i) {
    out += format_real(g.center(i));
    out += ',';
    out += format_real(s.u[i]);
    out += ',';
    out += format_real(s.c[i]);
    out += ',';
    out += format_real(s.P[i]);
    out += ',';
    out += format_real(0.5 * (gP[i] + gP[i + 1]));
    out += '\n';
  }
  return out;
}

SnapshotTable parse_snapshot_csv(std::string_view text) {
  std::vector<std::string> header;
  std::vector<std::vector<double>*> columns;
  SnapshotTable table;
  std::size_t line_no = 0;
  bool have_x = false, have_u = false;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    std::vector<std::string_view> cells;
    for (std::size_t start = 0;;) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }

    if (columns.empty()) {
      for (auto name : cells) {
        std::vector<double>* col = nullptr;
        if (name == "x") col = &table.x, have_x = true;
        else if (name == "u") col = &table.u, have_u = true;
        else if (name == "c") col = &table.c;
        else if (name == "P") col = &table.P;
        else if (name == "gradP") col = &table.gradP;
        columns.push_back(col);
      }
      if (!have_x || !have_u) throw InputError("snapshot csv: header must name columns x and u");
      continue;
    }
    if (cells.size() != columns.size()) {
      throw InputError("snapshot csv: line " + std::to_string(line_no) + " has wrong column count");
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (!columns[k]) continue;
      double v = 0.0;
      const auto* end = cells[k].data() + cells[k].size();
      const auto [ptr, ec] = std::from_chars(cells[k].data(), end, v);
      if (ec != std::errc() || ptr != end) {
        throw InputError("snapshot csv: malformed number on line " + std::to_string(line_no));
      }
      columns[k]->push_back(v);
    }
  }
  if (columns.empty()) throw InputError("snapshot csv: empty document");
  return table;
}

std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records) {
  std::string out =
      "t,mass,u_min,u_max,comp_residual_l1,excess_sat_l2_sq_increment,grad_P_energy_increment,"
      "defect_increment,sat_product_P,sat_product_gradP\n";
  for (const auto& r : records) {
    for (double v : {r.t, r.mass, r.u_min, r.u_max, r.comp_residual_l1,
                     r.excess_sat_l2_sq_increment, r.grad_P_energy_increment, r.defect_increment,
                     r.sat_product_P}) {
      out += format_real(v);
      out += ',';
    }
    out += format_real(r.sat_product_gradP);
    out += '\n';
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

}  // namespace stiffpress
