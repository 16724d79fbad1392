#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "slin/operator.hpp"

using namespace slin;

namespace {

BasisPtr small_basis(int dim, int order, int quad) {
  BasisConfig cfg;
  cfg.dim = dim;
  cfg.order = order;
  cfg.quad_order = quad;
  return make_basis(cfg);
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

TemperedDistribution embed_basis_fn(const BasisPtr& basis, std::size_t flat) {
  return embed_function(basis, [&, flat](std::span<const double> x) {
    return Complex(basis->eval_multi(flat, x), 0.0);
  });
}

}  // namespace

TEST_CASE("apply is the transpose of the stored matrix") {
  const BasisPtr basis = small_basis(1, 2, 8);
  // b rows: src index m; columns: dst index
  const std::vector<Complex> b = {{1, 0}, {2, 0}, {0, 1},
                                  {0, 0}, {1, 1}, {3, 0},
                                  {5, 0}, {0, 0}, {0, -2}};
  const SLinearOperator L(basis, basis, b);
  std::vector<Complex> du(3, Complex(0.0, 0.0));
  du[1] = {1.0, 0.0};
  const TemperedDistribution row1 = apply(L, TemperedDistribution(basis, du));
  CHECK(row1.duals()[0] == Complex(0.0, 0.0));
  CHECK(row1.duals()[1] == Complex(1.0, 1.0));
  CHECK(row1.duals()[2] == Complex(3.0, 0.0));
}

TEST_CASE("identity operator fixes distributions") {
  const BasisPtr basis = small_basis(1, 9, 20);
  std::vector<Complex> du(basis->size());
  for (std::size_t j = 0; j < du.size(); ++j) du[j] = {std::sin(1.0 + double(j)), 0.25};
  const TemperedDistribution u(basis, du);
  const TemperedDistribution v = apply(identity_operator(basis), u);
  CHECK(max_abs_diff(v.duals(), u.duals()) == 0.0);
}

TEST_CASE("derivative operator on the embedded ground state") {
  const BasisPtr basis = small_basis(1, 32, 80);
  const TemperedDistribution u = embed_basis_fn(basis, 0);
  const TemperedDistribution up = apply(derivative_operator(basis, 0), u);
  // (h_0)' = -sqrt(1/2) h_1, read off through the duals
  CHECK(std::abs(up.duals()[1] - Complex(-std::sqrt(0.5), 0.0)) <= 1e-13);
  for (std::size_t j = 0; j < basis->size(); ++j) {
    if (j != 1) CHECK(std::abs(up.duals()[j]) <= 1e-13);
  }

  const SLinearOperator d = derivative_operator(basis, 0);
  const TemperedDistribution upp_twice = apply(d, apply(d, u));
  const TemperedDistribution upp_comp = apply(compose(d, d), u);
  CHECK(std::abs(upp_comp.duals()[0] - Complex(-0.5, 0.0)) <= 1e-13);
  CHECK(std::abs(upp_comp.duals()[2] - Complex(std::sqrt(0.5), 0.0)) <= 1e-13);
  CHECK(max_abs_diff(upp_twice.duals(), upp_comp.duals()) <= 1e-14);
}

TEST_CASE("derivative along each axis in two dimensions") {
  const BasisPtr basis = small_basis(2, 6, 14);
  const TemperedDistribution u = embed_basis_fn(basis, 0);  // h_(0,0)
  const int a01[2] = {0, 1};
  const int a10[2] = {1, 0};
  const std::size_t i01 = basis->flat_index({a01, 2});
  const std::size_t i10 = basis->flat_index({a10, 2});

  const TemperedDistribution dx = apply(derivative_operator(basis, 0), u);
  CHECK(std::abs(dx.duals()[i10] - Complex(-std::sqrt(0.5), 0.0)) <= 1e-12);
  CHECK(std::abs(dx.duals()[i01]) <= 1e-12);

  const TemperedDistribution dy = apply(derivative_operator(basis, 1), u);
  CHECK(std::abs(dy.duals()[i01] - Complex(-std::sqrt(0.5), 0.0)) <= 1e-12);
  CHECK(std::abs(dy.duals()[i10]) <= 1e-12);
}

TEST_CASE("characterization rebuilds operators from the dirac image") {
  const BasisPtr basis = small_basis(1, 8, 20);
  std::vector<Complex> b(basis->size() * basis->size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    b[i] = {std::cos(0.3 * double(i)), std::sin(0.11 * double(i))};
  }
  const SLinearOperator L(basis, basis, b);
  const SLinearOperator rebuilt = operator_from_dirac_image(L);
  CHECK(std::memcmp(rebuilt.b_matrix().data(), L.b_matrix().data(),
                    b.size() * sizeof(Complex)) == 0);

  // generated family of L, superposed with a dirac coefficient, recovers rows
  const SFamily gen = generated_family(L);
  CHECK(max_abs_diff(gen.matrix(), L.b_matrix()) == 0.0);
  const SLinearOperator again = superposition_operator(gen);
  CHECK(max_abs_diff(again.b_matrix(), L.b_matrix()) == 0.0);
}

TEST_CASE("composition matches sequential application") {
  const BasisPtr basis = small_basis(1, 7, 16);
  const std::size_t n = basis->size();
  std::vector<Complex> b1(n * n), b2(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    b1[i] = {std::sin(0.4 * double(i)), 0.2};
    b2[i] = {0.1, std::cos(0.9 * double(i))};
  }
  const SLinearOperator f(basis, basis, b1);
  const SLinearOperator g(basis, basis, b2);
  const SLinearOperator gf = compose(g, f);

  std::vector<Complex> du(n);
  for (std::size_t j = 0; j < n; ++j) du[j] = {double(j) * 0.3 - 1.0, 0.7};
  const TemperedDistribution u(basis, du);
  const TemperedDistribution seq = apply(g, apply(f, u));
  const TemperedDistribution once = apply(gf, u);
  CHECK(max_abs_diff(seq.duals(), once.duals()) <= 1e-12);

  const SLinearOperator idc = compose(identity_operator(basis), f);
  CHECK(max_abs_diff(idc.b_matrix(), f.b_matrix()) == 0.0);

  const BasisPtr other = small_basis(1, 5, 12);
  CHECK_THROWS_AS(compose(SLinearOperator(other, other,
                      std::vector<Complex>(other->size() * other->size())), f),
                  ConfigError);
}

TEST_CASE("fourier operator against direct oscillatory quadrature") {
  const BasisPtr basis = small_basis(1, 16, 80);
  const TemperedDistribution h2 = embed_basis_fn(basis, 2);
  const TemperedDistribution fh2 = apply(fourier_operator(basis), h2);
  // F(h_2) = (-i)^2 h_2 = -h_2
  CHECK(std::abs(fh2.duals()[2] - Complex(-1.0, 0.0)) <= 1e-12);

  // cross-check: (2 pi)^{-1/2} int h_2(x) e^{-ipx} dx at two frequencies
  const auto& rule = basis->rule();
  for (const double p : {0.3, 1.1}) {
    Complex direct = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double x = rule.nodes[q];
      direct += rule.scaled_weights[q] * basis->eval_1d(2, x) *
                std::exp(Complex(0.0, -p * x));
    }
    direct /= std::sqrt(2.0 * std::numbers::pi);
    const double from_op = -basis->eval_1d(2, p);  // value of F(h_2) at p
    CHECK(std::abs(direct - Complex(from_op, 0.0)) <= 1e-10);
  }

  // fourth power is the identity
  const SLinearOperator f = fourier_operator(basis);
  const SLinearOperator f4 = compose(f, compose(f, compose(f, f)));
  CHECK(max_abs_diff(f4.b_matrix(), identity_operator(basis).b_matrix()) == 0.0);
}

TEST_CASE("operator construction guards") {
  const BasisPtr basis = small_basis(1, 4, 12);
  CHECK_THROWS_AS(SLinearOperator(basis, basis, std::vector<Complex>(7)),
                  ConfigError);
  std::vector<Complex> bad(basis->size() * basis->size());
  bad[0] = Complex(0.0, std::numeric_limits<double>::quiet_NaN());
  CHECK_THROWS_AS(SLinearOperator(basis, basis, bad), InputError);
  std::vector<Complex> du(basis->size());
  const BasisPtr other = small_basis(1, 6, 14);
  std::vector<Complex> ok(basis->size() * basis->size());
  CHECK_THROWS_AS(apply(SLinearOperator(basis, basis, ok),
                        TemperedDistribution(other, std::vector<Complex>(other->size()))),
                  ConfigError);
}
