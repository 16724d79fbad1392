#pragma once

#include <span>
#include <vector>

#include "slin/hermite.hpp"

namespace slin {

//! Rapidly decreasing test function, stored by Hermite coefficients.
class TestFunction {
 public:
  TestFunction(BasisPtr basis, std::vector<Complex> coeffs);
  const BasisPtr& basis() const { return basis_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

 private:
  BasisPtr basis_;
  std::vector<Complex> coeffs_;
};

//! Tempered distribution, stored by its values on the basis: duals[a] = u(h_a).
class TemperedDistribution {
 public:
  TemperedDistribution(BasisPtr basis, std::vector<Complex> duals);
  const BasisPtr& basis() const { return basis_; }
  const std::vector<Complex>& duals() const { return duals_; }

 private:
  BasisPtr basis_;
  std::vector<Complex> duals_;
};

//! Bilinear action u(phi) = sum_a duals[a] coeffs[a]; no conjugation.
Complex pair(const TemperedDistribution& u, const TestFunction& phi);

//! Pointwise value of the truncated expansion at a point.
Complex eval(const TestFunction& phi, std::span<const double> point);

TemperedDistribution dirac_at(const BasisPtr& basis, std::span<const double> x);
TemperedDistribution embed_function(const BasisPtr& basis, const ScalarField& f);

// Basis function h_flat as a test function / as an embedded distribution.
TestFunction basis_function(const BasisPtr& basis, std::size_t flat);

TemperedDistribution dist_add(const TemperedDistribution& u,
                              const TemperedDistribution& w);
TemperedDistribution dist_scale(Complex c, const TemperedDistribution& u);
TestFunction fn_add(const TestFunction& phi, const TestFunction& psi);
TestFunction fn_scale(Complex c, const TestFunction& phi);

// Shared-resolution guard used across modules.
void require_same_config(const BasisPtr& a, const BasisPtr& b, const char* where);
void require_finite(std::span<const Complex> values, const char* where);

}  // namespace slin
