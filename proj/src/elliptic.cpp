#include "stiffpress/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "stiffpress/errors.hpp"

namespace stiffpress {

Tridiagonal HelmholtzSystem::matrix() const {
  Tridiagonal a(diag.size());
  a.diag = diag;
  for (std::size_t f = 1; f < diag.size(); ++f) {
    a.lower[f] = off[f - 1];
    a.upper[f - 1] = off[f - 1];
  }
  return a;
}

HelmholtzSystem assemble_helmholtz(const Field& u, const Grid1D& g) {
  check_shape(u, g);
  const std::size_t n = g.n_cells;
  const double w = 1.0 / (g.h * g.h);
  HelmholtzSystem sys;
  sys.diag.assign(n, 1.0);
  sys.off.assign(n - 1, -w);
  // Each interior face couples its two cells; boundary faces carry no flux.
  for (std::size_t f = 1; f < n; ++f) {
    sys.diag[f - 1] += w;
    sys.diag[f] += w;
  }
  sys.rhs = u;
  return sys;
}

Field solve_chemo(const Field& u, const Grid1D& g) {
  check_shape(u, g);
  if (!all_finite(u)) throw InputError("solve_chemo: density has non-finite entries");
  const HelmholtzSystem sys = assemble_helmholtz(u, g);
  Field c(solve_tridiagonal(sys.matrix(), sys.rhs.view()));
  if (!all_finite(c)) throw NumericalError("solve_chemo: non-finite solution");

  const double lo = min_value(u);
  const double hi = max_value(u);
  const double slack = 1e-12 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  if (min_value(c) < lo - slack || max_value(c) > hi + slack) {
    throw NumericalError("solve_chemo: maximum principle violated");
  }
  return c;
}

}  // namespace stiffpress
