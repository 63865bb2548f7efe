#pragma once

#include "stiffpress/grid.hpp"
#include "stiffpress/tridiagonal.hpp"

namespace stiffpress {

/// Symmetric tridiagonal system for -Delta_h c + c = u with zero-flux faces.
struct HelmholtzSystem {
  std::vector<double> diag;  // per cell
  std::vector<double> off;   // per interior face, couples cells i-1 and i
  Field rhs;

  Tridiagonal matrix() const;
};

HelmholtzSystem assemble_helmholtz(const Field& u, const Grid1D& g);

/// Chemoattractant from density. Checks the discrete maximum principle
/// min(u) <= c <= max(u) on return; throws InputError on non-finite u.
Field solve_chemo(const Field& u, const Grid1D& g);

}  // namespace stiffpress
