#include "stiffpress/tridiagonal.hpp"

#include <cmath>

#include "stiffpress/errors.hpp"

namespace stiffpress {

std::vector<double> solve_tridiagonal(const Tridiagonal& a, std::span<const double> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw ShapeError("tridiagonal: rhs length mismatch");
  std::vector<double> c_prime(n), x(n);
  double pivot = a.diag[0];
  if (pivot == 0.0 || !std::isfinite(pivot)) throw NumericalError("tridiagonal: zero pivot");
  c_prime[0] = n > 1 ? a.upper[0] / pivot : 0.0;
  x[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = a.diag[i] - a.lower[i] * c_prime[i - 1];
    if (pivot == 0.0 || !std::isfinite(pivot)) throw NumericalError("tridiagonal: zero pivot");
    c_prime[i] = i + 1 < n ? a.upper[i] / pivot : 0.0;
    x[i] = (rhs[i] - a.lower[i] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c_prime[i] * x[i + 1];
  return x;
}

std::vector<double> multiply(const Tridiagonal& a, std::span<const double> x) {
  const std::size_t n = a.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = a.diag[i] * x[i];
    if (i > 0) s += a.lower[i] * x[i - 1];
    if (i + 1 < n) s += a.upper[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

}  // namespace stiffpress
