#include <cmath>

#include "slin/kernels.hpp"

#include "kernels_common.hpp"

// Reference kernels. Complex arithmetic is spelled out on the re/im parts so
// the operation sequence is pinned down; the AVX2 variant mirrors it exactly
// for the axpy-style ops.

namespace slin::kernels {
namespace {

void zaxpy_scalar(std::size_t n, Complex a, const Complex* x, Complex* y) {
  const double ar = a.real(), ai = a.imag();
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = xs[2 * i], xi = xs[2 * i + 1];
    const double pr = ar * xr - ai * xi;
    const double pi = ar * xi + ai * xr;
    ys[2 * i] = ys[2 * i] + pr;
    ys[2 * i + 1] = ys[2 * i + 1] + pi;
  }
}

void zraxpy_scalar(std::size_t n, Complex a, const double* r, Complex* y) {
  const double ar = a.real(), ai = a.imag();
  double* ys = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    ys[2 * i] = ys[2 * i] + ar * r[i];
    ys[2 * i + 1] = ys[2 * i + 1] + ai * r[i];
  }
}

void zscal_scalar(std::size_t n, Complex a, Complex* x) {
  const double ar = a.real(), ai = a.imag();
  double* xs = reinterpret_cast<double*>(x);
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = xs[2 * i], xi = xs[2 * i + 1];
    xs[2 * i] = ar * xr - ai * xi;
    xs[2 * i + 1] = ar * xi + ai * xr;
  }
}

Complex zdotu_scalar(std::size_t n, const Complex* x, const Complex* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  double accr = 0.0, acci = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = xs[2 * i], xi = xs[2 * i + 1];
    const double yr = ys[2 * i], yi = ys[2 * i + 1];
    accr = accr + (xr * yr - xi * yi);
    acci = acci + (xr * yi + xi * yr);
  }
  return {accr, acci};
}

Complex zrdot_scalar(std::size_t n, const double* r, const Complex* z) {
  const double* zs = reinterpret_cast<const double*>(z);
  double accr = 0.0, acci = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    accr = accr + r[i] * zs[2 * i];
    acci = acci + r[i] * zs[2 * i + 1];
  }
  return {accr, acci};
}

void hermite_rows_scalar(int degree, const double* pts, std::size_t npts,
                         double* out) {
  detail::hermite_seed_rows(degree, pts, npts, out);
  for (int j = 1; j < degree; ++j) {
    const double a = std::sqrt(2.0 / (j + 1));
    const double b = std::sqrt(double(j) / (j + 1));
    const double* hc = out + std::size_t(j) * npts;
    const double* hp = out + std::size_t(j - 1) * npts;
    double* hn = out + std::size_t(j + 1) * npts;
    for (std::size_t i = 0; i < npts; ++i) {
      hn[i] = (a * pts[i]) * hc[i] - b * hp[i];
    }
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table = {
      zaxpy_scalar,  zraxpy_scalar, zscal_scalar,
      zdotu_scalar,  zrdot_scalar,  hermite_rows_scalar,
  };
  return table;
}

void gemv_n(const Ops& ops, std::size_t rows, std::size_t cols,
            const Complex* a, const Complex* x, Complex* y) {
  for (std::size_t i = 0; i < rows; ++i) {
    y[i] = ops.zdotu(cols, a + i * cols, x);
  }
}

void gemv_t(const Ops& ops, std::size_t rows, std::size_t cols,
            const Complex* a, const Complex* x, Complex* y) {
  for (std::size_t j = 0; j < cols; ++j) y[j] = Complex(0.0, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    ops.zaxpy(cols, x[i], a + i * cols, y);
  }
}

void gemm_nn(const Ops& ops, std::size_t m, std::size_t k, std::size_t n,
             const Complex* a, const Complex* b, Complex* c) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = Complex(0.0, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t kk = 0; kk < k; ++kk) {
      ops.zaxpy(n, a[i * k + kk], b + kk * n, crow);
    }
  }
}

void gemv_n(std::size_t rows, std::size_t cols, const Complex* a,
            const Complex* x, Complex* y) {
  gemv_n(active(), rows, cols, a, x, y);
}

void gemv_t(std::size_t rows, std::size_t cols, const Complex* a,
            const Complex* x, Complex* y) {
  gemv_t(active(), rows, cols, a, x, y);
}

void gemm_nn(std::size_t m, std::size_t k, std::size_t n, const Complex* a,
             const Complex* b, Complex* c) {
  gemm_nn(active(), m, k, n, a, b, c);
}

}  // namespace slin::kernels
