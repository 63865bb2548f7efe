#include "stiffpress/reference.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "stiffpress/errors.hpp"

namespace stiffpress::reference {

namespace {

// Dense Neumann Laplacian, 1/h^2 scaling.
Matrix laplacian(const Grid1D& g) {
  const std::size_t n = g.n_cells;
  const double w = 1.0 / (g.h * g.h);
  Matrix L(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      L[i][i - 1] += w;
      L[i][i] -= w;
    }
    if (i + 1 < n) {
      L[i][i + 1] += w;
      L[i][i] -= w;
    }
  }
  return L;
}

}  // namespace

std::vector<double> dense_solve(Matrix a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0.0) throw NumericalError("dense_solve: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return x;
}

Field chemo(const Field& u, const Grid1D& g) {
  Matrix A = laplacian(g);
  for (std::size_t i = 0; i < g.n_cells; ++i) {
    for (double& v : A[i]) v = -v;
    A[i][i] += 1.0;
  }
  return Field(dense_solve(std::move(A), u.values));
}

SimState pme_step(const SimState& s, const ModelParams& p, const Grid1D& g, double dt) {
  const std::size_t n = g.n_cells;
  std::vector<double> rhs = s.u.values;
  for (std::size_t f = 1; f < n; ++f) {
    const double v = p.chi * (s.c[f] - s.c[f - 1]) / g.h;
    const double flux = v >= 0.0 ? v * s.u[f - 1] * (p.K - s.u[f]) : v * s.u[f] * (p.K - s.u[f - 1]);
    rhs[f - 1] -= dt / g.h * flux;
    rhs[f] += dt / g.h * flux;
  }

  const Matrix L = laplacian(g);
  std::vector<double> u = s.u.values;
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<double> R(n);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double lap = 0.0;
      for (std::size_t j = 0; j < n; ++j) lap += L[i][j] * std::pow(u[j], p.m);
      R[i] = u[i] - dt * p.D * lap - rhs[i];
      res = std::max(res, std::abs(R[i]));
    }
    if (res <= p.newton_tol) break;
    Matrix J(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        J[i][j] = (i == j ? 1.0 : 0.0) - dt * p.D * L[i][j] * p.m * std::pow(u[j], p.m - 1.0);
      }
      R[i] = -R[i];
    }
    const std::vector<double> delta = dense_solve(std::move(J), std::move(R));
    for (std::size_t i = 0; i < n; ++i) u[i] = std::max(0.0, u[i] + delta[i]);
  }
  for (double& v : u) v = std::clamp(v, 0.0, p.K);

  SimState out;
  out.t = s.t + dt;
  out.u = Field(u);
  out.c = chemo(out.u, g);
  out.P = Field(n);
  for (std::size_t i = 0; i < n; ++i) out.P[i] = p.m / (p.m - 1.0) * std::pow(u[i], p.m - 1.0);
  return out;
}

SimState hyperbolic_step(const SimState& s, const ModelParams& p, const Grid1D& g, double dt) {
  const std::size_t n = g.n_cells;
  std::vector<double> u = s.u.values;
  auto flux_fn = [&](double x) { return x * (p.K - x); };
  for (std::size_t f = 1; f < n; ++f) {
    const double uL = s.u[f - 1];
    const double uR = s.u[f];
    const double v = p.chi * (s.c[f] - s.c[f - 1]) / g.h;
    const double speed = std::abs(v) * std::max(std::abs(p.K - 2.0 * uL), std::abs(p.K - 2.0 * uR));
    const double F = 0.5 * v * (flux_fn(uL) + flux_fn(uR)) - 0.5 * speed * (uR - uL);
    u[f - 1] -= dt / g.h * F;
    u[f] += dt / g.h * F;
  }
  SimState out;
  out.t = s.t + dt;
  out.u = Field(u);
  out.c = chemo(out.u, g);
  out.P = Field(n, 0.0);
  if (p.K > 1.0) {
    for (std::size_t i = 0; i < n; ++i) out.P[i] = p.m / (p.m - 1.0) * std::pow(u[i], p.m - 1.0);
  }
  return out;
}

}  // namespace stiffpress::reference
