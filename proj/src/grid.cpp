#include "stiffpress/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stiffpress/errors.hpp"

namespace stiffpress {

std::vector<double> Grid1D::centers() const {
  std::vector<double> x(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) x[i] = center(i);
  return x;
}

Grid1D build_grid(double x_min, double x_max, std::size_t n_cells) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw ConfigError("grid: need finite x_min < x_max", "x_min");
  }
  if (n_cells < 2) throw ConfigError("grid: n_cells must be >= 2", "n_cells");
  Grid1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_cells = n_cells;
  g.h = (x_max - x_min) / static_cast<double>(n_cells);
  return g;
}

void check_shape(const Field& f, const Grid1D& g) {
  if (f.size() != g.n_cells) {
    throw ShapeError("field has " + std::to_string(f.size()) + " cells, grid has " +
                     std::to_string(g.n_cells));
  }
}

void check_shape(const FaceField& f, const Grid1D& g) {
  if (f.size() != g.n_cells + 1) {
    throw ShapeError("face field has " + std::to_string(f.size()) + " faces, grid needs " +
                     std::to_string(g.n_cells + 1));
  }
}

FaceField face_gradient(const Field& f, const Grid1D& g) {
  check_shape(f, g);
  FaceField grad(g.n_cells + 1);
  const double inv_h = 1.0 / g.h;
  for (std::size_t i = 1; i < g.n_cells; ++i) grad[i] = (f[i] - f[i - 1]) * inv_h;
  return grad;
}

Field cell_divergence(const FaceField& flux, const Grid1D& g) {
  check_shape(flux, g);
  Field div(g.n_cells);
  const double inv_h = 1.0 / g.h;
  for (std::size_t i = 0; i < g.n_cells; ++i) div[i] = (flux[i + 1] - flux[i]) * inv_h;
  return div;
}

Field neumann_laplacian(const Field& f, const Grid1D& g) {
  return cell_divergence(face_gradient(f, g), g);
}

double norm(const Field& f, const Grid1D& g, double p) {
  check_shape(f, g);
  if (p == kInfNorm) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double v : f) s += std::abs(v);
    return s * g.h;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double v : f) s += v * v;
    return std::sqrt(s * g.h);
  }
  throw UsageError("norm: exponent must be 1, 2 or infinity");
}

double integral(const Field& f, const Grid1D& g) {
  check_shape(f, g);
  double s = 0.0;
  for (double v : f) s += v;
  return s * g.h;
}

double min_value(const Field& f) { return *std::min_element(f.begin(), f.end()); }
double max_value(const Field& f) { return *std::max_element(f.begin(), f.end()); }

bool all_finite(const Field& f) {
  return std::all_of(f.begin(), f.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace stiffpress
