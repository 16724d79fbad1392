#pragma once

#include <complex>
#include <cstddef>

namespace slin {

using Complex = std::complex<double>;

namespace kernels {

/*! Table of the data-parallel inner loops. Two implementations ship: a scalar
 *  reference and an AVX2 variant; active() picks one per process at first use.
 *  The axpy-style ops (zaxpy, zraxpy, zscal, hermite_rows) are written so both
 *  variants produce bitwise-identical output; the reducing ops (zdotu, zrdot)
 *  differ only by summation order. */
struct Ops {
  // y[i] += a * x[i]
  void (*zaxpy)(std::size_t n, Complex a, const Complex* x, Complex* y);
  // y[i] += a * r[i], real input vector
  void (*zraxpy)(std::size_t n, Complex a, const double* r, Complex* y);
  // x[i] *= a
  void (*zscal)(std::size_t n, Complex a, Complex* x);
  // sum_i x[i] * y[i], bilinear (no conjugation)
  Complex (*zdotu)(std::size_t n, const Complex* x, const Complex* y);
  // sum_i r[i] * z[i]
  Complex (*zrdot)(std::size_t n, const double* r, const Complex* z);
  // Hermite-function rows j = 0..degree at pts[0..npts), out[j*npts + i] = h_j(pts[i])
  void (*hermite_rows)(int degree, const double* pts, std::size_t npts, double* out);
};

enum class Backend { scalar, avx2 };

const Ops& scalar_ops();
const Ops* avx2_ops();   // nullptr when not compiled in or CPU lacks AVX2
bool avx2_supported();

// Selected once per process: AVX2 when available, scalar otherwise.
// SLIN_KERNELS=scalar in the environment forces the reference path.
const Ops& active();
Backend active_backend();

// Dense loops composed from one table so a call never mixes variants.
// All matrices are row-major.
void gemv_n(const Ops& ops, std::size_t rows, std::size_t cols,
            const Complex* a, const Complex* x, Complex* y);   // y = A x
void gemv_t(const Ops& ops, std::size_t rows, std::size_t cols,
            const Complex* a, const Complex* x, Complex* y);   // y = A^T x
void gemm_nn(const Ops& ops, std::size_t m, std::size_t k, std::size_t n,
             const Complex* a, const Complex* b, Complex* c);  // C = A B

void gemv_n(std::size_t rows, std::size_t cols, const Complex* a, const Complex* x, Complex* y);
void gemv_t(std::size_t rows, std::size_t cols, const Complex* a, const Complex* x, Complex* y);
void gemm_nn(std::size_t m, std::size_t k, std::size_t n,
             const Complex* a, const Complex* b, Complex* c);

}  // namespace kernels
}  // namespace slin
