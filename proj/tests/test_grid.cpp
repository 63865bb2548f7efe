#include <doctest.h>

#include <cmath>
#include <random>

#include "stiffpress/errors.hpp"
#include "stiffpress/grid.hpp"
#include "stiffpress/tridiagonal.hpp"

using namespace stiffpress;

TEST_CASE("build_grid spacing and centres") {
  const Grid1D g = build_grid(0, 1, 4);
  CHECK(g.h == 0.25);
  CHECK(g.centers() == std::vector<double>{0.125, 0.375, 0.625, 0.875});
  CHECK(build_grid(0, 1, 200).h == doctest::Approx(0.005).epsilon(1e-15));

  const Grid1D g2 = build_grid(-1, 1, 8);
  CHECK(g2.h == 0.25);
  CHECK(g2.center(0) == -0.875);
}

TEST_CASE("build_grid rejects degenerate input") {
  CHECK_THROWS_AS(build_grid(1, 1, 10), ConfigError);
  CHECK_THROWS_AS(build_grid(2, 1, 10), ConfigError);
  CHECK_THROWS_AS(build_grid(0, 1, 1), ConfigError);
}

TEST_CASE("centres are equispaced and increasing") {
  const Grid1D g = build_grid(-0.3, 2.7, 37);
  const auto x = g.centers();
  for (std::size_t i = 1; i < x.size(); ++i) {
    CHECK(x[i] > x[i - 1]);
    CHECK(x[i] - x[i - 1] == doctest::Approx(g.h).epsilon(1e-12));
  }
}

TEST_CASE("face_gradient") {
  const Grid1D g = build_grid(0, 1, 10);

  SUBCASE("constant field has zero gradient") {
    const FaceField d = face_gradient(Field(10, 3.7), g);
    for (double v : d) CHECK(v == 0.0);
  }
  SUBCASE("identity has unit slope inside, zero on the boundary") {
    const FaceField d = face_gradient(sample(g, [](double x) { return x; }), g);
    CHECK(d[0] == 0.0);
    CHECK(d[10] == 0.0);
    for (std::size_t f = 1; f < 10; ++f) CHECK(d[f] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("random field matches a per-face difference loop") {
    const Grid1D g5 = build_grid(0, 1, 5);
    std::mt19937 rng(11);
    std::normal_distribution<double> dist;
    Field f(5);
    for (auto& v : f.values) v = dist(rng);
    const FaceField d = face_gradient(f, g5);
    REQUIRE(d.size() == 6);
    CHECK(d[0] == 0.0);
    CHECK(d[5] == 0.0);
    for (std::size_t k = 1; k <= 4; ++k) {
      const double expected = (f.values.at(k) - f.values.at(k - 1)) * 5.0;
      CHECK(d[k] == doctest::Approx(expected).epsilon(1e-14));
    }
  }
  SUBCASE("length mismatch") { CHECK_THROWS_AS(face_gradient(Field(9), g), ShapeError); }
}

TEST_CASE("cell_divergence") {
  const Grid1D g = build_grid(0, 1, 4);
  CHECK(cell_divergence(FaceField(5), g) == Field(4, 0.0));

  FaceField F(5);
  F[2] = 1.0;
  const Field d = cell_divergence(F, g);
  CHECK(d[0] == 0.0);
  CHECK(d[1] == 4.0);
  CHECK(d[2] == -4.0);
  CHECK(d[3] == 0.0);

  CHECK_THROWS_AS(cell_divergence(FaceField(4), g), ShapeError);
}

TEST_CASE("property: discrete divergence theorem for zero boundary flux") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> size(2, 300);
  std::uniform_real_distribution<double> val(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    const Grid1D g = build_grid(val(rng), 20.0 + val(rng), n);
    FaceField F(n + 1);
    for (std::size_t f = 1; f < n; ++f) F[f] = val(rng);
    const double total = integral(cell_divergence(F, g), g);
    CHECK(std::abs(total) <= 1e-13 * static_cast<double>(n) * 10.0);
  }
}

TEST_CASE("Laplacian of a linear field vanishes away from the boundary") {
  const Grid1D g = build_grid(0, 2, 16);
  const Field lap = neumann_laplacian(sample(g, [](double x) { return 3.0 * x - 1.0; }), g);
  for (std::size_t i = 1; i + 1 < g.n_cells; ++i) CHECK(std::abs(lap[i]) < 1e-10);
  CHECK(lap[0] > 0.0);
  CHECK(lap[15] < 0.0);
}

TEST_CASE("norms") {
  const Grid1D unit = build_grid(0, 1, 10);
  const Field one(10, 1.0);
  CHECK(norm(one, unit, 1.0) == doctest::Approx(1.0));
  CHECK(norm(one, unit, kInfNorm) == 1.0);

  const Grid1D two = build_grid(0, 1, 2);
  const Field f(std::vector<double>{3, -4});
  CHECK(norm(f, two, 2.0) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-15));
  CHECK(norm(f, two, 1.0) == doctest::Approx(3.5));
  CHECK(norm(f, two, kInfNorm) == 4.0);
  CHECK_THROWS_AS(norm(f, two, 3.0), UsageError);
}

TEST_CASE("Thomas solver agrees with a direct multiply") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> val(-1, 1);
  Tridiagonal a(50);
  std::vector<double> x(50);
  for (std::size_t i = 0; i < 50; ++i) {
    a.lower[i] = val(rng);
    a.upper[i] = val(rng);
    a.diag[i] = 3.0 + val(rng);
    x[i] = val(rng);
  }
  const auto b = multiply(a, x);
  const auto y = solve_tridiagonal(a, b);
  for (std::size_t i = 0; i < 50; ++i) CHECK(y[i] == doctest::Approx(x[i]).epsilon(1e-12));
}
