#include "slin/operator.hpp"

#include <string>

namespace slin {

SLinearOperator::SLinearOperator(BasisPtr src_basis, BasisPtr dst_basis,
                                 std::vector<Complex> b_matrix)
    : src_basis_(std::move(src_basis)),
      dst_basis_(std::move(dst_basis)),
      b_(std::move(b_matrix)) {
  if (!src_basis_ || !dst_basis_) {
    throw ConfigError("SLinearOperator: null basis");
  }
  if (b_.size() != src_basis_->size() * dst_basis_->size()) {
    throw ConfigError("SLinearOperator: matrix shape does not match the bases");
  }
  require_finite(b_, "SLinearOperator");
}

SLinearOperator transpose_of(const BasisPtr& src_basis,
                             const BasisPtr& dst_basis,
                             std::vector<Complex> b_matrix) {
  return SLinearOperator(src_basis, dst_basis, std::move(b_matrix));
}

TemperedDistribution apply(const SLinearOperator& L,
                           const TemperedDistribution& u) {
  require_same_config(L.src_basis(), u.basis(), "apply");
  std::vector<Complex> duals(L.cols());
  kernels::gemv_t(L.rows(), L.cols(), L.b_matrix().data(), u.duals().data(),
                  duals.data());
  return TemperedDistribution(L.dst_basis(), std::move(duals));
}

SFamily image_family(const SLinearOperator& L, const SFamily& v) {
  require_same_config(v.value_basis(), L.src_basis(), "image_family");
  std::vector<Complex> m(v.rows() * L.cols());
  kernels::gemm_nn(v.rows(), v.cols(), L.cols(), v.matrix().data(),
                   L.b_matrix().data(), m.data());
  return SFamily(v.index_basis(), L.dst_basis(), std::move(m));
}

SFamily generated_family(const SLinearOperator& L) {
  return SFamily(L.src_basis(), L.dst_basis(), L.b_matrix());
}

SLinearOperator superposition_operator(const SFamily& w) {
  return SLinearOperator(w.index_basis(), w.value_basis(), w.matrix());
}

SLinearOperator operator_from_dirac_image(const SLinearOperator& L) {
  return superposition_operator(
      image_family(L, dirac_family(L.src_basis())));
}

SLinearOperator compose(const SLinearOperator& second,
                        const SLinearOperator& first) {
  require_same_config(first.dst_basis(), second.src_basis(), "compose");
  std::vector<Complex> b(first.rows() * second.cols());
  kernels::gemm_nn(first.rows(), first.cols(), second.cols(),
                   first.b_matrix().data(), second.b_matrix().data(), b.data());
  return SLinearOperator(first.src_basis(), second.dst_basis(), std::move(b));
}

SLinearOperator identity_operator(const BasisPtr& basis) {
  if (!basis) throw ConfigError("identity_operator: null basis");
  const std::size_t n = basis->size();
  std::vector<Complex> b(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) b[i * n + i] = Complex(1.0, 0.0);
  return SLinearOperator(basis, basis, std::move(b));
}

SLinearOperator derivative_operator(const BasisPtr& basis, int axis) {
  if (!basis) throw ConfigError("derivative_operator: null basis");
  if (axis < 0 || axis >= basis->dim()) {
    throw InputError("derivative_operator: axis " + std::to_string(axis) +
                     " out of range for dim " + std::to_string(basis->dim()));
  }
  const std::size_t n = basis->size();
  const std::size_t ax = basis->axis_size();
  const std::vector<double>& d1 = basis->derivative_matrix_1d();
  std::vector<Complex> b(n * n, Complex(0.0, 0.0));
  for (std::size_t r = 0; r < n; ++r) {
    const auto ar = basis->multi_index(r);
    for (std::size_t c = 0; c < n; ++c) {
      const auto ac = basis->multi_index(c);
      bool match = true;
      for (int d = 0; d < basis->dim(); ++d) {
        if (d != axis && ar[d] != ac[d]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      const double v = d1[std::size_t(ar[axis]) * ax + std::size_t(ac[axis])];
      if (v != 0.0) b[r * n + c] = Complex(-v, 0.0);
    }
  }
  return SLinearOperator(basis, basis, std::move(b));
}

SLinearOperator fourier_operator(const BasisPtr& basis) {
  if (!basis) throw ConfigError("fourier_operator: null basis");
  const std::size_t n = basis->size();
  // powers of -i cycle with period 4
  const Complex cycle[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  std::vector<Complex> b(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto alpha = basis->multi_index(i);
    int total = 0;
    for (int v : alpha) total += v;
    b[i * n + i] = cycle[total % 4];
  }
  return SLinearOperator(basis, basis, std::move(b));
}

}  // namespace slin
