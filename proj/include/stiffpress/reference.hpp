#pragma once

// Straightforward dense/loop re-implementations used to check the production
// solvers. Nothing here is on the solver path.

#include <vector>

#include "stiffpress/grid.hpp"
#include "stiffpress/pme.hpp"

namespace stiffpress::reference {

using Matrix = std::vector<std::vector<double>>;

/// Gaussian elimination with partial pivoting.
std::vector<double> dense_solve(Matrix a, std::vector<double> b);

/// -Laplacian + identity assembled densely, then dense_solve.
Field chemo(const Field& u, const Grid1D& g);

/// One split step with the full Jacobian assembled entry by entry.
SimState pme_step(const SimState& s, const ModelParams& p, const Grid1D& g, double dt);

/// One LLF step written as a single per-face loop.
SimState hyperbolic_step(const SimState& s, const ModelParams& p, const Grid1D& g, double dt);

}  // namespace stiffpress::reference
