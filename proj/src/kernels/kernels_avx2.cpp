#if defined(__AVX2__)

#include <immintrin.h>

#include <cmath>

#include "slin/kernels.hpp"

#include "kernels_common.hpp"

// AVX2 variants. Complex products use mul + addsub (no FMA) in the same
// operation order as the scalar reference, so zaxpy/zraxpy/zscal/hermite_rows
// match it bitwise; the dot reductions differ only in accumulation order.

namespace slin::kernels {
namespace {

// a * x for packed [re, im, re, im]
inline __m256d cmul_const(__m256d ar, __m256d ai, __m256d x) {
  const __m256d xswap = _mm256_permute_pd(x, 0x5);
  return _mm256_addsub_pd(_mm256_mul_pd(ar, x), _mm256_mul_pd(ai, xswap));
}

void zaxpy_avx2(std::size_t n, Complex a, const Complex* x, Complex* y) {
  const double arr = a.real(), aii = a.imag();
  const __m256d ar = _mm256_set1_pd(arr);
  const __m256d ai = _mm256_set1_pd(aii);
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    _mm256_storeu_pd(ys + 2 * i, _mm256_add_pd(yv, cmul_const(ar, ai, xv)));
  }
  for (; i < n; ++i) {
    const double xr = xs[2 * i], xi = xs[2 * i + 1];
    const double pr = arr * xr - aii * xi;
    const double pi = arr * xi + aii * xr;
    ys[2 * i] = ys[2 * i] + pr;
    ys[2 * i + 1] = ys[2 * i + 1] + pi;
  }
}

void zraxpy_avx2(std::size_t n, Complex a, const double* r, Complex* y) {
  const double arr = a.real(), aii = a.imag();
  const __m256d av = _mm256_setr_pd(arr, aii, arr, aii);
  double* ys = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m128d rp = _mm_loadu_pd(r + i);
    const __m256d rv =
        _mm256_permute4x64_pd(_mm256_castpd128_pd256(rp), 0x50);  // r0 r0 r1 r1
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    _mm256_storeu_pd(ys + 2 * i, _mm256_add_pd(yv, _mm256_mul_pd(av, rv)));
  }
  for (; i < n; ++i) {
    ys[2 * i] = ys[2 * i] + arr * r[i];
    ys[2 * i + 1] = ys[2 * i + 1] + aii * r[i];
  }
}

void zscal_avx2(std::size_t n, Complex a, Complex* x) {
  const double arr = a.real(), aii = a.imag();
  const __m256d ar = _mm256_set1_pd(arr);
  const __m256d ai = _mm256_set1_pd(aii);
  double* xs = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    _mm256_storeu_pd(xs + 2 * i, cmul_const(ar, ai, xv));
  }
  for (; i < n; ++i) {
    const double xr = xs[2 * i], xi = xs[2 * i + 1];
    xs[2 * i] = arr * xr - aii * xi;
    xs[2 * i + 1] = arr * xi + aii * xr;
  }
}

Complex zdotu_avx2(std::size_t n, const Complex* x, const Complex* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    const __m256d xeven = _mm256_permute_pd(xv, 0x0);
    const __m256d xodd = _mm256_permute_pd(xv, 0xF);
    const __m256d yswap = _mm256_permute_pd(yv, 0x5);
    const __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(xeven, yv),
                                          _mm256_mul_pd(xodd, yswap));
    acc = _mm256_add_pd(acc, prod);
  }
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d sum = _mm_add_pd(lo, hi);
  double accr = _mm_cvtsd_f64(sum);
  double acci = _mm_cvtsd_f64(_mm_unpackhi_pd(sum, sum));
  for (; i < n; ++i) {
    const double xr = xs[2 * i], xi = xs[2 * i + 1];
    const double yr = ys[2 * i], yi = ys[2 * i + 1];
    accr = accr + (xr * yr - xi * yi);
    acci = acci + (xr * yi + xi * yr);
  }
  return {accr, acci};
}

Complex zrdot_avx2(std::size_t n, const double* r, const Complex* z) {
  const double* zs = reinterpret_cast<const double*>(z);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m128d rp = _mm_loadu_pd(r + i);
    const __m256d rv = _mm256_permute4x64_pd(_mm256_castpd128_pd256(rp), 0x50);
    const __m256d zv = _mm256_loadu_pd(zs + 2 * i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(rv, zv));
  }
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d sum = _mm_add_pd(lo, hi);
  double accr = _mm_cvtsd_f64(sum);
  double acci = _mm_cvtsd_f64(_mm_unpackhi_pd(sum, sum));
  for (; i < n; ++i) {
    accr = accr + r[i] * zs[2 * i];
    acci = acci + r[i] * zs[2 * i + 1];
  }
  return {accr, acci};
}

void hermite_rows_avx2(int degree, const double* pts, std::size_t npts,
                       double* out) {
  detail::hermite_seed_rows(degree, pts, npts, out);
  for (int j = 1; j < degree; ++j) {
    const double a = std::sqrt(2.0 / (j + 1));
    const double b = std::sqrt(double(j) / (j + 1));
    const __m256d av = _mm256_set1_pd(a);
    const __m256d bv = _mm256_set1_pd(b);
    const double* hc = out + std::size_t(j) * npts;
    const double* hp = out + std::size_t(j - 1) * npts;
    double* hn = out + std::size_t(j + 1) * npts;
    std::size_t i = 0;
    for (; i + 4 <= npts; i += 4) {
      const __m256d xv = _mm256_loadu_pd(pts + i);
      const __m256d hcv = _mm256_loadu_pd(hc + i);
      const __m256d hpv = _mm256_loadu_pd(hp + i);
      const __m256d t = _mm256_mul_pd(_mm256_mul_pd(av, xv), hcv);
      _mm256_storeu_pd(hn + i, _mm256_sub_pd(t, _mm256_mul_pd(bv, hpv)));
    }
    for (; i < npts; ++i) {
      hn[i] = (a * pts[i]) * hc[i] - b * hp[i];
    }
  }
}

}  // namespace

const Ops* avx2_ops_table() {
  static const Ops table = {
      zaxpy_avx2,  zraxpy_avx2, zscal_avx2,
      zdotu_avx2,  zrdot_avx2,  hermite_rows_avx2,
  };
  return &table;
}

}  // namespace slin::kernels

#endif  // __AVX2__
