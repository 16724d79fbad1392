#pragma once

#include <span>
#include <vector>

#include "slin/family.hpp"

namespace slin {

//! S-linear operator L = t(B) : S'_src -> S'_dst for B : S_dst -> S_src on
//! test functions. Stored row-major as b_matrix (size_src x size_dst); column
//! b holds the S_src coefficients of B(h_b).
class SLinearOperator {
 public:
  SLinearOperator(BasisPtr src_basis, BasisPtr dst_basis,
                  std::vector<Complex> b_matrix);

  const BasisPtr& src_basis() const { return src_basis_; }
  const BasisPtr& dst_basis() const { return dst_basis_; }
  const std::vector<Complex>& b_matrix() const { return b_; }
  std::size_t rows() const { return src_basis_->size(); }
  std::size_t cols() const { return dst_basis_->size(); }

 private:
  BasisPtr src_basis_;
  BasisPtr dst_basis_;
  std::vector<Complex> b_;
};

//! Wrap a coefficient matrix of B : S_dst -> S_src as the operator t(B).
SLinearOperator transpose_of(const BasisPtr& src_basis,
                             const BasisPtr& dst_basis,
                             std::vector<Complex> b_matrix);

//! duals(L u) = b_matrix^T duals(u).
TemperedDistribution apply(const SLinearOperator& L,
                           const TemperedDistribution& u);

//! Family p -> L(v_p); matrix = matrix(v) * b_matrix.
SFamily image_family(const SLinearOperator& L, const SFamily& v);

//! The family B_vee with (B_vee)^ = B: index space = src of L, values in
//! S'_dst; matrix = b_matrix.
SFamily generated_family(const SLinearOperator& L);

//! Superposition operator a -> int a w of a family.
SLinearOperator superposition_operator(const SFamily& w);

//! Rebuild L from its image of the Dirac family: t((L delta)^). Equals L's
//! b_matrix bitwise.
SLinearOperator operator_from_dirac_image(const SLinearOperator& L);

//! compose(second, first) = second after first.
SLinearOperator compose(const SLinearOperator& second,
                        const SLinearOperator& first);

SLinearOperator identity_operator(const BasisPtr& basis);
//! Distributional d/dx_axis: b_matrix = -D along the axis.
SLinearOperator derivative_operator(const BasisPtr& basis, int axis = 0);
//! Fourier transform; diagonal (-i)^{|a|} on Hermite duals, fourth power is
//! the identity.
SLinearOperator fourier_operator(const BasisPtr& basis);

}  // namespace slin
