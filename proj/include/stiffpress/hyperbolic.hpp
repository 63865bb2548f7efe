#pragma once

#include "stiffpress/pme.hpp"

namespace stiffpress {

/// Local Lax-Friedrichs flux for v * u (K - u) with frozen face velocity.
/// Boundary faces are zero.
FaceField llf_flux(const Field& u, const FaceField& velocity, double K);

/// Conservative update for the limit system du/dt = -div(chi u (K - u) grad c).
/// Pressure is reported as zero for K <= 1. Throws StepRejected when dt
/// exceeds stable_dt.
StepReport step_hyperbolic(const SimState& s, const ModelParams& p, const Grid1D& g, double dt);

/// Pressure carried by a limit-run state.
Field limit_pressure(const Field& u, const ModelParams& p);

}  // namespace stiffpress
