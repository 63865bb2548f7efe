#pragma once

#include <cstdint>
#include <vector>

#include "stiffpress/grid.hpp"
#include "stiffpress/pme.hpp"

namespace stiffpress {

/// Per-step measured quantities. Increments are over [t, t + dt] using the
/// state at the left endpoint.
struct DiagnosticsRecord {
  double t = 0.0;
  double mass = 0.0;
  double u_min = 0.0;
  double u_max = 0.0;
  double comp_residual_l1 = 0.0;
  double excess_sat_l2_sq_increment = 0.0;  // dt * sum h ((u-1)_+)^2
  double grad_P_energy_increment = 0.0;     // dt * sum_faces h |d_x P|^2
  double defect_increment = 0.0;            // dt * sum_faces h d_x u * d_x u^m
  double sat_product_P = 0.0;               // || P (1 - u) ||_1
  double sat_product_gradP = 0.0;           // || d_x P (1 - u_face) ||_1
};

DiagnosticsRecord record_diagnostics(const SimState& s, const ModelParams& p, const Grid1D& g,
                                     double dt);

struct Complementarity {
  Field residual;  // P (D Delta_h P + chi (K-1)(1-c))
  double l1 = 0.0;
};

Complementarity complementarity_residual(const SimState& s, const ModelParams& p, const Grid1D& g);

/// Discretisation of the kinetic variable xi and the coarse-graining window.
struct KineticGrid {
  std::vector<double> xi;  // bin midpoints, increasing
  double dxi = 0.0;
  std::size_t window_cells = 5;
};

/// `nodes` uniform bins on [0, K (1 + margin)].
KineticGrid make_kinetic_grid(double K, std::size_t nodes = 64, double margin = 0.05,
                              std::size_t window_cells = 5);

/// Raw indicator 1_{xi_j < u_i}, row-major (cell, xi).
std::vector<std::uint8_t> kinetic_indicator(const Field& u, const KineticGrid& kg);

/// sum over windows and xi of fbar (1 - fbar) * window_width * dxi, where fbar
/// is the indicator averaged over non-overlapping blocks of window_cells cells.
double kinetic_two_valued_metric(const Field& u, const Grid1D& g, const KineticGrid& kg);

struct MuProfile {
  Field mu;                           // D Delta_h P + chi (K-1)(1-c), 0 off support
  std::vector<std::uint8_t> support;  // P > threshold
  std::vector<std::uint8_t> saturated;  // window mean of (1 - u) < threshold
  double threshold = 0.0;
  bool degenerate = false;  // K <= 1
};

/// eps_threshold < 0 selects the default 1e-6 * max(P).
MuProfile mu_profile(const SimState& s, const ModelParams& p, const Grid1D& g,
                     double eps_threshold = -1.0, std::size_t window_cells = 5);

/// Cells of `mask` whose neighbours within `radius` are all in `mask`.
std::vector<std::uint8_t> erode(const std::vector<std::uint8_t>& mask, std::size_t radius);

/// m/(m-1) K^(m-1); requires K < 1 (throws UsageError otherwise).
double pressure_sup_bound(const ModelParams& p);

}  // namespace stiffpress
