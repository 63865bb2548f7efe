#include "stiffpress/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stiffpress/elliptic.hpp"
#include "stiffpress/errors.hpp"

namespace stiffpress {

FaceField llf_flux(const Field& u, const FaceField& velocity, double K) {
  const std::size_t n = u.size();
  FaceField F(n + 1);
  for (std::size_t f = 1; f < n; ++f) {
    const double v = velocity[f];
    const double uL = u[f - 1];
    const double uR = u[f];
    const double alpha = std::abs(v) * std::max(std::abs(K - 2.0 * uL), std::abs(K - 2.0 * uR));
    F[f] = 0.5 * (v * (uL * (K - uL) + uR * (K - uR)) - alpha * (uR - uL));
  }
  return F;
}

Field limit_pressure(const Field& u, const ModelParams& p) {
  if (p.K <= 1.0) return Field(u.size(), 0.0);
  return compute_pressure(u, p.m);
}

StepReport step_hyperbolic(const SimState& s, const ModelParams& p, const Grid1D& g, double dt) {
  check_shape(s.u, g);
  const double dt_limit = stable_dt(s, p, g);
  if (dt > dt_limit * (1.0 + 1e-12)) {
    throw StepRejected("step_hyperbolic: dt=" + std::to_string(dt) + " exceeds CFL limit " +
                       std::to_string(dt_limit));
  }
  const FaceField v = advective_velocity(s.c, p, g);
  const Field div = cell_divergence(llf_flux(s.u, v, p.K), g);

  constexpr double kTol = 1e-12;
  Field u(g.n_cells);
  double clipped = 0.0;
  for (std::size_t i = 0; i < g.n_cells; ++i) {
    const double raw = s.u[i] - dt * div[i];
    if (raw < -kTol * p.K || raw > p.K * (1.0 + kTol)) {
      throw InvariantError("step_hyperbolic: u=" + std::to_string(raw) + " left [0, K] in cell " +
                           std::to_string(i));
    }
    u[i] = std::clamp(raw, 0.0, p.K);
    clipped += std::abs(u[i] - raw);
  }

  StepReport report;
  report.clipped_mass = clipped * g.h;
  report.state.t = s.t + dt;
  report.state.c = solve_chemo(u, g);
  report.state.P = limit_pressure(u, p);
  report.state.u = std::move(u);
  return report;
}

}  // namespace stiffpress
