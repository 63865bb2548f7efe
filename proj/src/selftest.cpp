#include "stiffpress/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "stiffpress/config.hpp"
#include "stiffpress/diagnostics.hpp"
#include "stiffpress/elliptic.hpp"
#include "stiffpress/errors.hpp"
#include "stiffpress/hyperbolic.hpp"
#include "stiffpress/pme.hpp"
#include "stiffpress/reference.hpp"
#include "stiffpress/sweep.hpp"

namespace stiffpress {

bool SelfTestReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string SelfTestReport::text() const {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
    passed += c.passed ? 1 : 0;
  }
  out << passed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

namespace {

double max_abs_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

}  // namespace

SelfTestReport selftest() {
  SelfTestReport report;
  auto check = [&](std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    SelfTestCheck c{std::move(name), false, {}};
    try {
      std::tie(c.passed, c.detail) = body();
    } catch (const std::exception& e) {
      c.detail = std::string("threw: ") + e.what();
    }
    report.checks.push_back(std::move(c));
  };

  check("grid (0,1,4)", [] {
    const Grid1D g = build_grid(0, 1, 4);
    const bool ok = g.h == 0.25 && g.center(0) == 0.125 && g.center(3) == 0.875;
    return std::pair{ok, std::string{}};
  });
  check("grid (-1,1,8) first centre", [] {
    const Grid1D g = build_grid(-1, 1, 8);
    return std::pair{g.h == 0.25 && g.center(0) == -0.875, std::string{}};
  });
  check("gradient of linear field", [] {
    const Grid1D g = build_grid(0, 1, 10);
    const FaceField d = face_gradient(sample(g, [](double x) { return x; }), g);
    bool ok = d[0] == 0.0 && d[10] == 0.0;
    for (std::size_t f = 1; f < 10; ++f) ok = ok && std::abs(d[f] - 1.0) < 1e-12;
    return std::pair{ok, std::string{}};
  });
  check("divergence of a single face", [] {
    const Grid1D g = build_grid(0, 1, 4);
    FaceField F(5);
    F[2] = 1.0;
    const Field d = cell_divergence(F, g);
    return std::pair{d[1] == 4.0 && d[2] == -4.0 && std::abs(integral(d, g)) < 1e-15,
                     std::string{}};
  });
  check("L2 norm of {3,-4}", [] {
    const Grid1D g = build_grid(0, 1, 2);
    const double n = norm(Field(std::vector<double>{3, -4}), g, 2.0);
    return std::pair{std::abs(n - std::sqrt(12.5)) < 1e-14, num(n)};
  });
  check("chemo of a constant", [] {
    const Grid1D g = build_grid(0, 1, 50);
    const Field c = solve_chemo(Field(50, 1.0), g);
    return std::pair{max_abs_diff(c, Field(50, 1.0)) < 1e-13, std::string{}};
  });
  check("chemo cosine error at n=200", [] {
    const Grid1D g = build_grid(0, 1, 200);
    const double pi = std::numbers::pi;
    const Field c = solve_chemo(sample(g, [&](double x) { return std::cos(pi * x); }), g);
    const Field exact = sample(g, [&](double x) { return std::cos(pi * x) / (1 + pi * pi); });
    const double err = max_abs_diff(c, exact);
    return std::pair{err < 1e-3, "max error " + num(err)};
  });
  check("chemo vs dense oracle (n=16)", [] {
    const Grid1D g = build_grid(0, 1, 16);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    Field u(16);
    for (auto& v : u.values) v = dist(rng);
    const double err = max_abs_diff(solve_chemo(u, g), reference::chemo(u, g));
    return std::pair{err < 1e-12, num(err)};
  });
  check("pressure law", [] {
    const Field P1 = compute_pressure(Field(1, 1.0), 2.0);
    const Field P2 = compute_pressure(Field(1, 0.5), 3.0);
    const Field P0 = compute_pressure(Field(1, 0.0), 3.0);
    return std::pair{P1[0] == 2.0 && std::abs(P2[0] - 0.375) < 1e-15 && P0[0] == 0.0,
                     std::string{}};
  });
  check("stable_dt formula", [] {
    const Grid1D g = build_grid(0, 1, 100);
    ModelParams p;
    p.K = 1.0;
    p.chi = 1.0;
    p.cfl = 0.5;
    SimState s;
    s.u = Field(100, 1e-3);
    s.c = sample(g, [](double x) { return 2.0 * x; });
    s.P = compute_pressure(s.u, p.m);
    const double dt = stable_dt(s, p, g);
    return std::pair{std::abs(dt - 0.0025) < 1e-15, num(dt)};
  });
  check("pme fixed points u=K and u=0", [] {
    const Grid1D g = build_grid(0, 1, 20);
    ModelParams p;
    p.m = 5;
    p.chi = 40;
    const SimState full = make_state(0, Field(20, p.K), p, g);
    const SimState empty = make_state(0, Field(20, 0.0), p, g);
    const double e1 = max_abs_diff(step_pme(full, p, g, 1e-3).state.u, full.u);
    const double e2 = max_abs_diff(step_pme(empty, p, g, 1e-3).state.u, empty.u);
    return std::pair{e1 < 1e-14 && e2 == 0.0, num(e1)};
  });
  check("pme step vs dense Newton oracle (n=8)", [] {
    const Grid1D g = build_grid(0, 1, 8);
    ModelParams p;
    p.m = 3;
    p.chi = 40;
    Field u = sample(g, [](double x) { return 0.5 - 0.3 * std::cos(std::numbers::pi * x); });
    SimState s = make_state(0, u, p, g);
    const double dt = stable_dt(s, p, g);
    const double err = max_abs_diff(step_pme(s, p, g, dt).state.u, reference::pme_step(s, p, g, dt).u);
    return std::pair{err < 1e-10, num(err)};
  });
  check("hyperbolic step vs flux loop (n=8)", [] {
    const Grid1D g = build_grid(0, 1, 8);
    ModelParams p;
    p.chi = 40;
    Field u = sample(g, [](double x) { return 0.5 - 0.3 * std::cos(std::numbers::pi * x); });
    SimState s{0, u, solve_chemo(u, g), Field(8, 0.0)};
    const double dt = stable_dt(s, p, g);
    const double err =
        max_abs_diff(step_hyperbolic(s, p, g, dt).state.u, reference::hyperbolic_step(s, p, g, dt).u);
    return std::pair{err < 1e-12, num(err)};
  });
  check("excess saturation of u=1.5", [] {
    const Grid1D g = build_grid(0, 1, 10);
    ModelParams p;
    p.K = 2;
    const SimState s = make_state(0, Field(10, 1.5), p, g);
    const double e = record_diagnostics(s, p, g, 1.0).excess_sat_l2_sq_increment;
    return std::pair{std::abs(e - 0.25) < 1e-14, num(e)};
  });
  check("kinetic two-cell window", [] {
    const Grid1D g = build_grid(0, 1, 2);
    const KineticGrid kg = make_kinetic_grid(1.0, 64, 0.0, 2);
    const double metric = kinetic_two_valued_metric(Field(std::vector<double>{0.0, 1.0}), g, kg);
    return std::pair{std::abs(metric - 0.25) < 1e-14, num(metric)};
  });
  check("pressure sup bound", [] {
    ModelParams p;
    p.K = 0.6;
    p.m = 2;
    const double b2 = pressure_sup_bound(p);
    p.m = 20;
    const double b20 = pressure_sup_bound(p);
    const double expect = 20.0 / 19.0 * std::pow(0.6, 19);
    return std::pair{std::abs(b2 - 1.2) < 1e-15 && std::abs(b20 - expect) < 1e-18, num(b20)};
  });
  check("config defaults", [] {
    const RunConfig cfg = parse_config("n_cells=100\nm=2\nK=1\nt_final=1\n");
    const bool ok = cfg.params.chi == 1.0 && cfg.params.D == 1.0 && cfg.x_min == 0.0 &&
                    cfg.x_max == 1.0 && cfg.n_cells == 100;
    return std::pair{ok, std::string{}};
  });
  check("config rejects K=-1", [] {
    try {
      parse_config("K=-1\n");
    } catch (const ConfigError& e) {
      return std::pair{e.key() == "K", std::string(e.what())};
    }
    return std::pair{false, std::string("no error")};
  });
  check("limit distance of a constant offset", [] {
    const Grid1D g = build_grid(0, 1, 10);
    SimState a, b;
    a.u = Field(10, 0.3);
    b.u = Field(10, 0.4);
    const double d = compare_to_limit({b}, {a}, g, 1.0)[0];
    return std::pair{std::abs(d - 0.1) < 1e-14, num(d)};
  });
  return report;
}

}  // namespace stiffpress
