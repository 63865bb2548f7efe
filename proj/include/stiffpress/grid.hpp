#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace stiffpress {

/// Uniform cell-centred mesh on [x_min, x_max].
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n_cells = 0;
  double h = 0.0;

  double center(std::size_t i) const { return x_min + (static_cast<double>(i) + 0.5) * h; }
  double face(std::size_t i) const { return x_min + static_cast<double>(i) * h; }
  double length() const { return x_max - x_min; }
  std::vector<double> centers() const;

  bool operator==(const Grid1D&) const = default;
};

/// Cell averages, one value per cell.
struct Field {
  std::vector<double> values;

  Field() = default;
  explicit Field(std::size_t n, double fill = 0.0) : values(n, fill) {}
  explicit Field(std::vector<double> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  std::span<const double> view() const { return values; }
  auto begin() const { return values.begin(); }
  auto end() const { return values.end(); }

  bool operator==(const Field&) const = default;
};

/// Face values, n_cells + 1 entries; entries 0 and n_cells are the boundary faces.
struct FaceField {
  std::vector<double> values;

  FaceField() = default;
  explicit FaceField(std::size_t n, double fill = 0.0) : values(n, fill) {}
  explicit FaceField(std::vector<double> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  auto begin() const { return values.begin(); }
  auto end() const { return values.end(); }
};

inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

/// Throws ConfigError when x_min >= x_max or n_cells < 2.
Grid1D build_grid(double x_min, double x_max, std::size_t n_cells);

/// Samples `fn` at the cell centres.
template <class Fn>
Field sample(const Grid1D& g, Fn&& fn) {
  Field f(g.n_cells);
  for (std::size_t i = 0; i < g.n_cells; ++i) f[i] = fn(g.center(i));
  return f;
}

void check_shape(const Field& f, const Grid1D& g);
void check_shape(const FaceField& f, const Grid1D& g);

/// (f[i] - f[i-1]) / h on interior faces; boundary faces are zero (no flux).
FaceField face_gradient(const Field& f, const Grid1D& g);

/// (F[i+1] - F[i]) / h per cell.
Field cell_divergence(const FaceField& flux, const Grid1D& g);

/// Neumann Laplacian: cell_divergence(face_gradient(f)).
Field neumann_laplacian(const Field& f, const Grid1D& g);

/// Discrete L^p norm for p in {1, 2, kInfNorm}; other p throw UsageError.
double norm(const Field& f, const Grid1D& g, double p);

/// Sum of f_i * h.
double integral(const Field& f, const Grid1D& g);

double min_value(const Field& f);
double max_value(const Field& f);
bool all_finite(const Field& f);

}  // namespace stiffpress
