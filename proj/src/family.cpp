#include "slin/family.hpp"

#include <cmath>
#include <string>

namespace slin {

namespace {

// C = A * B for real square matrices of side n, row-major.
std::vector<double> mat_mul_1d(const std::vector<double>& a,
                               const std::vector<double>& b, std::size_t n) {
  std::vector<double> c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        c[i * n + j] += aik * b[k * n + j];
      }
    }
  }
  return c;
}

std::vector<double> mat_power_1d(const std::vector<double>& a, int p,
                                 std::size_t n) {
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) out[i * n + i] = 1.0;
  for (int k = 0; k < p; ++k) out = mat_mul_1d(a, out, n);
  return out;
}

}  // namespace

SFamily::SFamily(BasisPtr index_basis, BasisPtr value_basis,
                 std::vector<Complex> matrix)
    : index_basis_(std::move(index_basis)),
      value_basis_(std::move(value_basis)),
      matrix_(std::move(matrix)) {
  if (!index_basis_ || !value_basis_) throw ConfigError("SFamily: null basis");
  if (matrix_.size() != index_basis_->size() * value_basis_->size()) {
    throw ConfigError("SFamily: matrix shape does not match the bases");
  }
  require_finite(matrix_, "SFamily");
}

TestFunction family_apply(const SFamily& v, const TestFunction& phi) {
  require_same_config(v.value_basis(), phi.basis(), "family_apply");
  std::vector<Complex> coeffs(v.rows());
  kernels::gemv_n(v.rows(), v.cols(), v.matrix().data(), phi.coeffs().data(),
                  coeffs.data());
  return TestFunction(v.index_basis(), std::move(coeffs));
}

TemperedDistribution superpose(const TemperedDistribution& a,
                               const SFamily& v) {
  require_same_config(a.basis(), v.index_basis(), "superpose");
  std::vector<Complex> duals(v.cols());
  kernels::gemv_t(v.rows(), v.cols(), v.matrix().data(), a.duals().data(),
                  duals.data());
  return TemperedDistribution(v.value_basis(), std::move(duals));
}

TemperedDistribution member(const SFamily& v, std::span<const double> p) {
  return superpose(dirac_at(v.index_basis(), p), v);
}

SFamily dirac_family(const BasisPtr& basis) {
  if (!basis) throw ConfigError("dirac_family: null basis");
  const std::size_t n = basis->size();
  std::vector<Complex> m(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = Complex(1.0, 0.0);
  return SFamily(basis, basis, std::move(m));
}

SFamily dirac_derivative_family(const BasisPtr& basis,
                                std::span<const int> i) {
  if (!basis) throw ConfigError("dirac_derivative_family: null basis");
  if (i.size() != std::size_t(basis->dim())) {
    throw InputError("dirac_derivative_family: derivative arity mismatch");
  }
  int total = 0;
  for (int v : i) {
    if (v < 0) throw InputError("dirac_derivative_family: negative order");
    total += v;
  }
  const std::size_t axis = basis->axis_size();
  std::vector<std::vector<double>> powers;
  powers.reserve(i.size());
  for (std::size_t d = 0; d < i.size(); ++d) {
    powers.push_back(mat_power_1d(basis->derivative_matrix_1d(), i[d], axis));
  }
  const double sign = (total % 2 == 0) ? 1.0 : -1.0;
  const std::size_t n = basis->size();
  std::vector<Complex> m(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto ar = basis->multi_index(r);
    for (std::size_t c = 0; c < n; ++c) {
      const auto ac = basis->multi_index(c);
      double v = 1.0;
      for (int d = 0; d < basis->dim(); ++d) {
        v *= powers[std::size_t(d)][std::size_t(ar[d]) * axis + std::size_t(ac[d])];
      }
      m[r * n + c] = Complex(sign * v, 0.0);
    }
  }
  return SFamily(basis, basis, std::move(m));
}

SFamily family_product(const SFamily& v, const SFamily& w) {
  require_same_config(v.value_basis(), w.index_basis(), "family_product");
  std::vector<Complex> m(v.rows() * w.cols());
  kernels::gemm_nn(v.rows(), v.cols(), w.cols(), v.matrix().data(),
                   w.matrix().data(), m.data());
  return SFamily(v.index_basis(), w.value_basis(), std::move(m));
}

SFamily family_from_samples(const BasisPtr& index_basis,
                            const BasisPtr& value_basis,
                            const FamilySampler& sampler,
                            double* max_residual) {
  if (!index_basis || !value_basis) {
    throw ConfigError("family_from_samples: null basis");
  }
  if (!sampler) throw InputError("family_from_samples: empty sampler");

  // Fit every column on a wider basis so decay past the family's own band is
  // observable. For order >= 8 the tail band starts exactly at order+1.
  BasisConfig ext_cfg = index_basis->config();
  ext_cfg.order = std::max((5 * ext_cfg.order) / 4, ext_cfg.order + 2);
  ext_cfg.quad_order = std::max(ext_cfg.quad_order, 2 * ext_cfg.order + 2);
  const Basis ext(ext_cfg);

  const std::size_t ncols = value_basis->size();
  const std::size_t ext_rows = ext.size();
  std::vector<Complex> cfit(ext_rows * ncols, Complex(0.0, 0.0));
  const auto& ops = kernels::active();

  for_each_quad_node(ext, [&](std::span<const double> point, double w,
                              std::span<const double> row) {
    const TemperedDistribution sample = sampler(point);
    require_same_config(sample.basis(), value_basis,
                        "family_from_samples: sampler value");
    for (std::size_t b = 0; b < ext_rows; ++b) {
      ops.zaxpy(ncols, Complex(w * row[b], 0.0), sample.duals().data(),
                cfit.data() + b * ncols);
    }
  });

  double worst = 0.0;
  std::size_t worst_col = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    const double r =
        tail_residual(ext, cfit.data() + c, ncols, index_basis->config().tol);
    if (r > worst) {
      worst = r;
      worst_col = c;
    }
  }
  if (max_residual) *max_residual = worst;
  if (worst > index_basis->config().tail_fraction) {
    throw NotSchwartzAtResolution(
        "family_from_samples: column " + std::to_string(worst_col) +
            " keeps tail energy fraction " + std::to_string(worst) +
            " above " + std::to_string(index_basis->config().tail_fraction),
        worst_col, worst);
  }

  const std::size_t rows = index_basis->size();
  std::vector<Complex> m(rows * ncols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t er = ext.flat_index(index_basis->multi_index(r));
    for (std::size_t c = 0; c < ncols; ++c) {
      m[r * ncols + c] = cfit[er * ncols + c];
    }
  }
  return SFamily(index_basis, value_basis, std::move(m));
}

}  // namespace slin
