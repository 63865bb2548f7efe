#pragma once

#include <span>
#include <vector>

namespace stiffpress {

/// Tridiagonal matrix: lower[i] = A(i, i-1) (lower[0] unused),
/// upper[i] = A(i, i+1) (upper[n-1] unused).
struct Tridiagonal {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  explicit Tridiagonal(std::size_t n = 0) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0) {}
  std::size_t size() const { return diag.size(); }
};

/// Thomas elimination without pivoting. Requires a diagonally dominant
/// (row- or column-wise) matrix; throws NumericalError on a zero pivot.
std::vector<double> solve_tridiagonal(const Tridiagonal& a, std::span<const double> rhs);

/// y = A x
std::vector<double> multiply(const Tridiagonal& a, std::span<const double> x);

}  // namespace stiffpress
