#pragma once

#include <cmath>
#include <cstddef>

namespace slin::kernels::detail {

inline constexpr double kQuarterRootPiInv = 0.7511255444649425;  // pi^(-1/4)

// Rows j = 0 and j = 1 of the Hermite-function table. Both kernel variants
// seed with this exact code so the recurrence rows stay bitwise comparable.
inline void hermite_seed_rows(int degree, const double* pts, std::size_t npts,
                              double* out) {
  for (std::size_t i = 0; i < npts; ++i) {
    out[i] = kQuarterRootPiInv * std::exp(-0.5 * pts[i] * pts[i]);
  }
  if (degree >= 1) {
    const double sqrt2 = std::sqrt(2.0);
    for (std::size_t i = 0; i < npts; ++i) {
      out[npts + i] = sqrt2 * pts[i] * out[i];
    }
  }
}

}  // namespace slin::kernels::detail
