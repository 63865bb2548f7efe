#include "stiffpress/pme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stiffpress/elliptic.hpp"
#include "stiffpress/errors.hpp"
#include "stiffpress/tridiagonal.hpp"

namespace stiffpress {

namespace {

void require(bool ok, const char* key, const char* what) {
  if (!ok) throw ConfigError(std::string(key) + ": " + what, key);
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

void ModelParams::validate() const {
  require(std::isfinite(m) && m > 1.0, "m", "must be > 1");
  require(std::isfinite(K) && K > 0.0, "K", "must be > 0");
  require(std::isfinite(chi) && chi >= 0.0, "chi", "must be >= 0");
  require(std::isfinite(D) && D > 0.0, "D", "must be > 0");
  require(std::isfinite(cfl) && cfl > 0.0 && cfl <= 1.0, "cfl", "must lie in (0, 1]");
  require(std::isfinite(newton_tol) && newton_tol > 0.0, "newton_tol", "must be > 0");
  require(newton_max_iter >= 1, "newton_max_iter", "must be >= 1");
  require(std::isfinite(dt_max_cap) && dt_max_cap > 0.0, "dt_max_cap", "must be > 0");
  require(max_halvings >= 0, "max_halvings", "must be >= 0");
}

Field compute_pressure(const Field& u, double m) {
  Field P(u.size());
  const double scale = m / (m - 1.0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0.0) {
      throw InvariantError("compute_pressure: negative density " + std::to_string(u[i]) +
                           " in cell " + std::to_string(i));
    }
    P[i] = scale * std::pow(u[i], m - 1.0);
  }
  return P;
}

SimState make_state(double t, Field u, const ModelParams& p, const Grid1D& g) {
  SimState s;
  s.t = t;
  s.c = solve_chemo(u, g);
  s.P = compute_pressure(u, p.m);
  s.u = std::move(u);
  return s;
}

FaceField advective_velocity(const Field& c, const ModelParams& p, const Grid1D& g) {
  FaceField v = face_gradient(c, g);
  for (double& x : v.values) x *= p.chi;
  return v;
}

FaceField volume_filling_flux(const Field& u, const FaceField& velocity, double K) {
  const std::size_t n = u.size();
  FaceField F(n + 1);
  for (std::size_t f = 1; f < n; ++f) {
    const double v = velocity[f];
    const double uL = u[f - 1];
    const double uR = u[f];
    F[f] = v >= 0.0 ? v * uL * (K - uR) : v * uR * (K - uL);
  }
  return F;
}

double stable_dt(const SimState& s, const ModelParams& p, const Grid1D& g) {
  const FaceField v = advective_velocity(s.c, p, g);
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));
  // |v g'(u)| <= |v| K on [0, K]; this also bounds both flux Lipschitz constants.
  const double speed = vmax * p.K;
  if (speed <= 0.0) return p.dt_max_cap;
  return std::min(p.dt_max_cap, p.cfl * g.h / speed);
}

StepReport step_pme(const SimState& s, const ModelParams& p, const Grid1D& g, double dt) {
  check_shape(s.u, g);
  const std::size_t n = g.n_cells;

  const FaceField v = advective_velocity(s.c, p, g);
  const Field adv = cell_divergence(volume_filling_flux(s.u, v, p.K), g);
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = s.u[i] - dt * adv[i];

  // Backward Euler for D Delta(u^m): solve u - a L(u^m) = rhs, a = dt D / h^2,
  // L the unscaled Neumann Laplacian stencil.
  const double a = dt * p.D / (g.h * g.h);
  Field u = s.u;
  Field w(n);
  std::vector<double> residual(n);
  Tridiagonal jac(n);

  auto evaluate_residual = [&] {
    for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(u[i], p.m);
    for (std::size_t i = 0; i < n; ++i) {
      double lap = 0.0;
      if (i > 0) lap += w[i - 1] - w[i];
      if (i + 1 < n) lap += w[i + 1] - w[i];
      residual[i] = u[i] - a * lap - rhs[i];
    }
    return inf_norm(residual);
  };

  StepReport report;
  double res = evaluate_residual();
  int iter = 0;
  while (!(res <= p.newton_tol)) {
    if (iter == p.newton_max_iter || !std::isfinite(res)) {
      throw StepRejected("step_pme: Newton did not converge at t=" + std::to_string(s.t) +
                         " dt=" + std::to_string(dt) + " residual=" + std::to_string(res));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double d = u[i] > 0.0 ? p.m * std::pow(u[i], p.m - 1.0) : 0.0;
      const double neighbours = (i > 0 ? 1.0 : 0.0) + (i + 1 < n ? 1.0 : 0.0);
      jac.diag[i] = 1.0 + a * neighbours * d;
      // Column i of -a L diag(d) has -a d_i in rows i-1 and i+1.
      if (i > 0) jac.upper[i - 1] = -a * d;
      if (i + 1 < n) jac.lower[i + 1] = -a * d;
      residual[i] = -residual[i];
    }
    const std::vector<double> delta = solve_tridiagonal(jac, residual);
    // Projected update (the discrete solution lies in [0, K]; unbounded iterates
    // overflow u^m for large m) with backtracking on the residual norm.
    const Field base = u;
    double lambda = 1.0;
    for (int trial = 0;; ++trial) {
      for (std::size_t i = 0; i < n; ++i)
        u[i] = std::clamp(base[i] + lambda * delta[i], 0.0, p.K);
      const double trial_res = evaluate_residual();
      if (trial_res < (1.0 - 1e-4 * lambda) * res || trial == 30) {
        res = trial_res;
        break;
      }
      lambda *= 0.5;
    }
    ++iter;
  }
  report.newton_iterations = iter;

  double clipped = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double bounded = std::clamp(u[i], 0.0, p.K);
    clipped += std::abs(bounded - u[i]);
    u[i] = bounded;
  }
  report.clipped_mass = clipped * g.h;
  report.state = make_state(s.t + dt, std::move(u), p, g);
  return report;
}

}  // namespace stiffpress
