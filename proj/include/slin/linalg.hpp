#pragma once

#include <cstddef>
#include <vector>

#include "slin/kernels.hpp"

namespace slin {

//! Dense complex LU with partial pivoting for the small square systems the
//! duality checks solve. Sizes stay at basis scale, so no blocking.
struct LuDecomposition {
  std::vector<Complex> lu;  // packed L (unit diagonal) and U, row-major
  std::vector<int> piv;
  std::size_t n = 0;
  bool singular = false;
};

LuDecomposition lu_factor(std::vector<Complex> a, std::size_t n);
//! Solve A x = b in place; b has length n. Undefined for singular factors.
void lu_solve(const LuDecomposition& f, Complex* b);
std::vector<Complex> lu_inverse(const LuDecomposition& f);

//! Matrix 1-norm (max column sum of moduli), row-major n x n.
double matrix_norm1(const std::vector<Complex>& a, std::size_t n);
//! 1-norm condition number via the explicit inverse; +inf when singular.
double condition_1norm(const std::vector<Complex>& a, std::size_t n);

}  // namespace slin
