#include "slin/linalg.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "slin/errors.hpp"

namespace slin {

LuDecomposition lu_factor(std::vector<Complex> a, std::size_t n) {
  if (a.size() != n * n) throw ConfigError("lu_factor: shape mismatch");
  LuDecomposition f;
  f.lu = std::move(a);
  f.piv.resize(n);
  f.n = n;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(f.lu[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = std::abs(f.lu[i * n + k]);
      if (m > best) {
        best = m;
        p = i;
      }
    }
    f.piv[k] = int(p);
    if (best == 0.0) {
      f.singular = true;
      return f;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(f.lu[k * n + j], f.lu[p * n + j]);
      }
    }
    const Complex pivot = f.lu[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex m = f.lu[i * n + k] / pivot;
      f.lu[i * n + k] = m;
      for (std::size_t j = k + 1; j < n; ++j) {
        f.lu[i * n + j] -= m * f.lu[k * n + j];
      }
    }
  }
  return f;
}

void lu_solve(const LuDecomposition& f, Complex* b) {
  const std::size_t n = f.n;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = std::size_t(f.piv[k]);
    if (p != k) std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      b[i] -= f.lu[i * n + k] * b[k];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      b[i] -= f.lu[i * n + j] * b[j];
    }
    b[i] /= f.lu[i * n + i];
  }
}

std::vector<Complex> lu_inverse(const LuDecomposition& f) {
  const std::size_t n = f.n;
  std::vector<Complex> inv(n * n, Complex(0.0, 0.0));
  std::vector<Complex> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = Complex(i == j ? 1.0 : 0.0, 0.0);
    lu_solve(f, col.data());
    for (std::size_t i = 0; i < n; ++i) inv[i * n + j] = col[i];
  }
  return inv;
}

double matrix_norm1(const std::vector<Complex>& a, std::size_t n) {
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::abs(a[i * n + j]);
    if (s > best) best = s;
  }
  return best;
}

double condition_1norm(const std::vector<Complex>& a, std::size_t n) {
  const LuDecomposition f = lu_factor(a, n);
  if (f.singular) return std::numeric_limits<double>::infinity();
  return matrix_norm1(a, n) * matrix_norm1(lu_inverse(f), n);
}

}  // namespace slin
