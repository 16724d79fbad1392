#pragma once

#include <functional>
#include <span>
#include <vector>

#include "slin/distribution.hpp"

namespace slin {

//! Smooth family of distributions v : R^k -> S'_n. Stored as the matrix of the
//! associated coefficient map: column a holds the S_k-coefficients of the
//! function p -> v_p(h_a). Row-major, rows over the index basis (size_k), and
//! columns over the value basis (size_n).
class SFamily {
 public:
  SFamily(BasisPtr index_basis, BasisPtr value_basis,
          std::vector<Complex> matrix);

  const BasisPtr& index_basis() const { return index_basis_; }
  const BasisPtr& value_basis() const { return value_basis_; }
  const std::vector<Complex>& matrix() const { return matrix_; }
  std::size_t rows() const { return index_basis_->size(); }
  std::size_t cols() const { return value_basis_->size(); }

 private:
  BasisPtr index_basis_;
  BasisPtr value_basis_;
  std::vector<Complex> matrix_;
};

//! phi -> (p -> v_p(phi)) as a test function on the index space.
TestFunction family_apply(const SFamily& v, const TestFunction& phi);

//! The member distribution v_p.
TemperedDistribution member(const SFamily& v, std::span<const double> p);

//! Superposition int a v: duals = matrix(v)^T duals(a).
TemperedDistribution superpose(const TemperedDistribution& a, const SFamily& v);

SFamily dirac_family(const BasisPtr& basis);
//! p -> (-1)^{|i|} delta_p^{(i)}, the i-th derivative Dirac family.
SFamily dirac_derivative_family(const BasisPtr& basis, std::span<const int> i);

//! (int v w)_p = int v_p w; matrix = matrix(v) * matrix(w).
SFamily family_product(const SFamily& v, const SFamily& w);

using FamilySampler =
    std::function<TemperedDistribution(std::span<const double>)>;

//! Reconstruct a family from pointwise samples. Each column p -> v_p(h_a) is
//! fitted on an internally extended basis; energy above the family's own band
//! beyond tail_fraction raises NotSchwartzAtResolution. max_residual, when
//! given, receives the worst column's tail fraction.
SFamily family_from_samples(const BasisPtr& index_basis,
                            const BasisPtr& value_basis,
                            const FamilySampler& sampler,
                            double* max_residual = nullptr);

}  // namespace slin
