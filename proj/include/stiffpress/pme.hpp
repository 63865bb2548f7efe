#pragma once

#include <cstddef>

#include "stiffpress/grid.hpp"

namespace stiffpress {

struct ModelParams {
  double m = 2.0;      // diffusion exponent, > 1
  double K = 1.0;      // capacity
  double chi = 1.0;    // chemotactic sensitivity
  double D = 1.0;      // diffusion coefficient
  double newton_tol = 1e-11;
  int newton_max_iter = 50;
  double cfl = 0.5;
  double dt_max_cap = 1e-2;
  int max_halvings = 20;

  /// Throws ConfigError naming the offending parameter.
  void validate() const;
};

/// Density, chemoattractant and pressure at time t.
struct SimState {
  double t = 0.0;
  Field u;
  Field c;
  Field P;
};

/// P_i = m/(m-1) * u_i^(m-1). Throws InvariantError on negative density.
Field compute_pressure(const Field& u, double m);

/// Builds a consistent state: c = solve_chemo(u), P from the pressure law.
SimState make_state(double t, Field u, const ModelParams& p, const Grid1D& g);

/// Face velocity chi * d_x c, zero on the boundary faces.
FaceField advective_velocity(const Field& c, const ModelParams& p, const Grid1D& g);

/// Upwind flux for v * u (K - u): the mobility u is taken from the upwind
/// cell and the vacancy K - u from the downwind cell.
FaceField volume_filling_flux(const Field& u, const FaceField& velocity, double K);

/// Largest stable step for the explicit advection, capped at dt_max_cap.
double stable_dt(const SimState& s, const ModelParams& p, const Grid1D& g);

struct StepReport {
  SimState state;
  int newton_iterations = 0;
  double clipped_mass = 0.0;  // |mass| removed or added by clipping, absolute
};

/// One split step: explicit upwind advection, then backward Euler on
/// D * Delta(u^m) solved by Newton. Throws StepRejected when Newton does not
/// converge in newton_max_iter iterations.
StepReport step_pme(const SimState& s, const ModelParams& p, const Grid1D& g, double dt);

}  // namespace stiffpress
