#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "slin/errors.hpp"
#include "slin/kernels.hpp"

namespace slin {

//! Resolution parameters shared by every object in a computation.
struct BasisConfig {
  int dim = 1;
  int order = 32;           // highest Hermite degree per axis
  int quad_order = 80;      // Gauss-Hermite points per axis, >= 2*order + 2
  double tol = 1e-10;       // energy floor for residual bookkeeping
  double tail_fraction = 1e-8;  // admissible tail energy fraction for fits

  friend bool operator==(const BasisConfig&, const BasisConfig&) = default;
};

//! Gauss-Hermite rule for weight e^{-x^2}: sum_i w_i f(x_i) ~ int f e^{-x^2}.
//! scaled_weights[i] = weights[i] * e^{x_i^2} absorbs the weight function, so
//! sum_i scaled_weights[i] g(x_i) ~ int g for integrands that decay on their own.
struct QuadratureRule {
  std::vector<double> nodes;    // ascending, symmetric about zero
  std::vector<double> weights;  // positive, sum = sqrt(pi)
  std::vector<double> scaled_weights;
};

QuadratureRule gauss_hermite(int q);

//! Truncated Hermite basis: per-axis degrees 0..order, multi-indices over
//! {0..order}^dim enumerated in graded lexicographic order. Immutable.
class Basis {
 public:
  explicit Basis(const BasisConfig& cfg);

  const BasisConfig& config() const { return cfg_; }
  int dim() const { return cfg_.dim; }
  int order() const { return cfg_.order; }
  int quad_order() const { return cfg_.quad_order; }
  std::size_t axis_size() const { return std::size_t(cfg_.order) + 1; }
  std::size_t size() const { return indices_.size() / std::size_t(cfg_.dim); }

  std::span<const int> multi_index(std::size_t flat) const;
  std::size_t flat_index(std::span<const int> alpha) const;
  int max_component(std::size_t flat) const;

  const QuadratureRule& rule() const { return rule_; }

  // h_degree at the node arrays: node-major row, values_at_nodes(q)[j] = h_j(x_q)
  std::span<const double> values_at_node(int node) const;

  double eval_1d(int degree, double x) const;
  void eval_all_1d(double x, std::span<double> out) const;  // h_0..h_order
  double eval_multi(std::size_t flat, std::span<const double> point) const;
  // h_alpha(point) for every flat index, in enumeration order
  std::vector<double> values_at_point(std::span<const double> point) const;

  // 1-D coefficient-space actions on spans of h_0..h_order, row-major
  // (D c)_m = sqrt((m+1)/2) c_{m+1} - sqrt(m/2) c_{m-1}
  const std::vector<double>& derivative_matrix_1d() const { return dmat_; }
  // (X c)_m = sqrt((m+1)/2) c_{m+1} + sqrt(m/2) c_{m-1}
  const std::vector<double>& position_matrix_1d() const { return xmat_; }

 private:
  BasisConfig cfg_;
  QuadratureRule rule_;
  std::vector<int> indices_;       // flat multi-index table, stride = dim
  std::vector<std::size_t> rank_;  // mixed-radix code -> flat position
  std::vector<double> node_values_;  // quad_order x (order+1), node-major
  std::vector<double> dmat_, xmat_;
};

using BasisPtr = std::shared_ptr<const Basis>;
BasisPtr make_basis(const BasisConfig& cfg);

double eval_hermite(const Basis& basis, int degree, double x);
const std::vector<double>& derivative_matrix(const Basis& basis);
const std::vector<double>& position_matrix(const Basis& basis);

using ScalarField = std::function<Complex(std::span<const double>)>;

struct FitResult {
  std::vector<Complex> coeffs;  // basis enumeration order
  double residual;              // tail energy fraction beyond degree ceil(0.8*order)
};

//! Quadrature projection of f onto the basis: coeffs[a] = int f h_a.
FitResult fit_function(const Basis& basis, const ScalarField& f);

// Degree above which fitted energy counts as tail: ceil(0.8 * order).
int tail_threshold(int order);

// Tail energy fraction of a (possibly strided) coefficient vector; 0 when the
// total energy sits below tol.
double tail_residual(const Basis& basis, const Complex* data,
                     std::size_t stride, double tol);

// Visit the tensor quadrature grid: fn(point, scaled_weight, basis_values_row)
// with the row holding h_alpha(point) in enumeration order.
void for_each_quad_node(
    const Basis& basis,
    const std::function<void(std::span<const double>, double,
                             std::span<const double>)>& fn);

}  // namespace slin
