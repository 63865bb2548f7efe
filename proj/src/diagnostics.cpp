#include "stiffpress/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "stiffpress/errors.hpp"

namespace stiffpress {

DiagnosticsRecord record_diagnostics(const SimState& s, const ModelParams& p, const Grid1D& g,
                                     double dt) {
  check_shape(s.u, g);
  const std::size_t n = g.n_cells;
  DiagnosticsRecord r;
  r.t = s.t;
  r.mass = integral(s.u, g);
  r.u_min = min_value(s.u);
  r.u_max = max_value(s.u);
  r.comp_residual_l1 = complementarity_residual(s, p, g).l1;

  double excess = 0.0;
  double sat_P = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = std::max(s.u[i] - 1.0, 0.0);
    excess += e * e;
    sat_P += std::abs(s.P[i] * (1.0 - s.u[i]));
  }
  r.excess_sat_l2_sq_increment = dt * g.h * excess;
  r.sat_product_P = sat_P * g.h;

  Field um(n);
  for (std::size_t i = 0; i < n; ++i) um[i] = std::pow(s.u[i], p.m);
  const FaceField gP = face_gradient(s.P, g);
  const FaceField gu = face_gradient(s.u, g);
  const FaceField gum = face_gradient(um, g);
  double energy = 0.0;
  double defect = 0.0;
  double sat_gP = 0.0;
  for (std::size_t f = 1; f < n; ++f) {
    energy += gP[f] * gP[f];
    // u^m is monotone in u, so each face term is non-negative.
    defect += gu[f] * gum[f];
    const double u_face = 0.5 * (s.u[f - 1] + s.u[f]);
    sat_gP += std::abs(gP[f] * (1.0 - u_face));
  }
  r.grad_P_energy_increment = dt * g.h * energy;
  r.defect_increment = dt * g.h * defect;
  r.sat_product_gradP = g.h * sat_gP;
  return r;
}

Complementarity complementarity_residual(const SimState& s, const ModelParams& p,
                                         const Grid1D& g) {
  check_shape(s.P, g);
  const Field lap = neumann_laplacian(s.P, g);
  Complementarity out;
  out.residual = Field(g.n_cells);
  double l1 = 0.0;
  for (std::size_t i = 0; i < g.n_cells; ++i) {
    const double r = s.P[i] * (p.D * lap[i] + p.chi * (p.K - 1.0) * (1.0 - s.c[i]));
    out.residual[i] = r;
    l1 += std::abs(r);
  }
  out.l1 = l1 * g.h;
  return out;
}

KineticGrid make_kinetic_grid(double K, std::size_t nodes, double margin,
                              std::size_t window_cells) {
  if (nodes == 0 || !(K > 0.0) || margin < 0.0) throw UsageError("kinetic grid: bad parameters");
  if (window_cells == 0) throw UsageError("kinetic grid: window_cells must be >= 1");
  KineticGrid kg;
  kg.dxi = K * (1.0 + margin) / static_cast<double>(nodes);
  kg.xi.resize(nodes);
  for (std::size_t j = 0; j < nodes; ++j) kg.xi[j] = (static_cast<double>(j) + 0.5) * kg.dxi;
  kg.window_cells = window_cells;
  return kg;
}

std::vector<std::uint8_t> kinetic_indicator(const Field& u, const KineticGrid& kg) {
  const std::size_t nx = kg.xi.size();
  std::vector<std::uint8_t> f(u.size() * nx);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < nx; ++j) f[i * nx + j] = kg.xi[j] < u[i] ? 1 : 0;
  }
  return f;
}

double kinetic_two_valued_metric(const Field& u, const Grid1D& g, const KineticGrid& kg) {
  check_shape(u, g);
  if (kg.window_cells == 0) throw UsageError("kinetic metric: window_cells must be >= 1");
  const std::size_t nx = kg.xi.size();
  const std::vector<std::uint8_t> f = kinetic_indicator(u, kg);
  double metric = 0.0;
  for (std::size_t start = 0; start < g.n_cells; start += kg.window_cells) {
    const std::size_t stop = std::min(g.n_cells, start + kg.window_cells);
    const double width = static_cast<double>(stop - start);
    double block = 0.0;
    for (std::size_t j = 0; j < nx; ++j) {
      std::size_t count = 0;
      for (std::size_t i = start; i < stop; ++i) count += f[i * nx + j];
      const double fbar = static_cast<double>(count) / width;
      block += fbar * (1.0 - fbar);
    }
    metric += block * width * g.h * kg.dxi;
  }
  return metric;
}

std::vector<std::uint8_t> erode(const std::vector<std::uint8_t>& mask, std::size_t radius) {
  const std::size_t n = mask.size();
  std::vector<std::uint8_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!mask[i]) continue;
    const std::size_t lo = i >= radius ? i - radius : 0;
    const std::size_t hi = std::min(n - 1, i + radius);
    bool inside = true;
    for (std::size_t k = lo; k <= hi && inside; ++k) inside = mask[k] != 0;
    out[i] = inside ? 1 : 0;
  }
  return out;
}

MuProfile mu_profile(const SimState& s, const ModelParams& p, const Grid1D& g,
                     double eps_threshold, std::size_t window_cells) {
  check_shape(s.P, g);
  const std::size_t n = g.n_cells;
  MuProfile out;
  out.degenerate = p.K <= 1.0;
  out.threshold = eps_threshold >= 0.0 ? eps_threshold : 1e-6 * max_value(s.P);
  out.mu = Field(n);
  out.support.assign(n, 0);
  out.saturated.assign(n, 0);

  const Field lap = neumann_laplacian(s.P, g);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.P[i] > out.threshold) {
      out.support[i] = 1;
      out.mu[i] = p.D * lap[i] + p.chi * (p.K - 1.0) * (1.0 - s.c[i]);
    }
  }
  // Centred window of window_cells cells, truncated at the boundary.
  const std::size_t radius = window_cells / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= radius ? i - radius : 0;
    const std::size_t hi = std::min(n - 1, i + radius);
    double sum = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) sum += 1.0 - s.u[k];
    out.saturated[i] = sum / static_cast<double>(hi - lo + 1) < out.threshold ? 1 : 0;
  }
  return out;
}

double pressure_sup_bound(const ModelParams& p) {
  if (!(p.K < 1.0)) throw UsageError("pressure_sup_bound: requires K < 1");
  return p.m / (p.m - 1.0) * std::pow(p.K, p.m - 1.0);
}

}  // namespace stiffpress
