#include "slin/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace slin {

namespace {

constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^(-1/4)

// One pass of the normalized three-term recurrence at z. On return p1 holds
// the degree-q orthonormal Hermite polynomial (Gaussian factor removed) and
// p2 the degree q-1 value.
void recurrence_at(int q, double z, double& p1, double& p2) {
  p1 = kPiQuarterInv;
  p2 = 0.0;
  for (int j = 0; j < q; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
  }
}

}  // namespace

QuadratureRule gauss_hermite(int q) {
  if (q < 1) {
    throw ConfigError("gauss_hermite: point count must be >= 1, got " +
                      std::to_string(q));
  }
  const double eps = 1e-14;
  const int max_iter = 64;

  QuadratureRule rule;
  rule.nodes.assign(q, 0.0);
  rule.weights.assign(q, 0.0);
  rule.scaled_weights.assign(q, 0.0);

  const int m = (q + 1) / 2;
  std::vector<double> roots(m, 0.0);  // positive roots, descending
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * q + 1.0) -
          1.85575 * std::pow(2.0 * q + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(double(q), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * roots[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * roots[1];
    } else {
      z = 2.0 * z - roots[i - 2];
    }

    double p1 = 0.0, p2 = 0.0;
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
      recurrence_at(q, z, p1, p2);
      const double pp = std::sqrt(2.0 * q) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= eps) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw ConfigError("gauss_hermite: Newton iteration did not converge at q=" +
                        std::to_string(q));
    }
    if (q % 2 == 1 && i == m - 1) z = 0.0;  // symmetry pins the center node
    roots[i] = z;

    recurrence_at(q, z, p1, p2);
    const double pp = std::sqrt(2.0 * q) * p2;
    const double w = 2.0 / (pp * pp);
    const double hq1 = p2 * std::exp(-0.5 * z * z);  // Hermite function value
    const double ws = 1.0 / (q * hq1 * hq1);

    rule.nodes[i] = -z;
    rule.nodes[q - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[q - 1 - i] = w;
    rule.scaled_weights[i] = ws;
    rule.scaled_weights[q - 1 - i] = ws;
  }
  return rule;
}

Basis::Basis(const BasisConfig& cfg) : cfg_(cfg) {
  if (cfg.dim < 1) {
    throw ConfigError("Basis: dim must be >= 1, got " + std::to_string(cfg.dim));
  }
  if (cfg.order < 1) {
    throw ConfigError("Basis: order must be >= 1, got " +
                      std::to_string(cfg.order));
  }
  if (cfg.quad_order < 2 * cfg.order + 2) {
    throw ConfigError("Basis: quad_order " + std::to_string(cfg.quad_order) +
                      " below 2*order+2 = " + std::to_string(2 * cfg.order + 2));
  }
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
    throw ConfigError("Basis: tol must be positive and finite");
  }
  if (!(cfg.tail_fraction > 0.0) || !(cfg.tail_fraction < 1.0)) {
    throw ConfigError("Basis: tail_fraction must lie in (0, 1)");
  }
  const double total = std::pow(double(cfg.order) + 1.0, cfg.dim);
  if (total > double(1 << 22)) {
    throw ConfigError("Basis: (order+1)^dim = " + std::to_string(total) +
                      " exceeds the supported resolution");
  }

  rule_ = gauss_hermite(cfg.quad_order);

  // Multi-indices over the box {0..order}^dim, graded lexicographic.
  const std::size_t axis = std::size_t(cfg.order) + 1;
  std::size_t count = 1;
  for (int d = 0; d < cfg.dim; ++d) count *= axis;
  std::vector<std::vector<int>> tuples;
  tuples.reserve(count);
  std::vector<int> cur(cfg.dim, 0);
  for (std::size_t i = 0; i < count; ++i) {
    tuples.push_back(cur);
    for (int d = cfg.dim - 1; d >= 0; --d) {
      if (++cur[d] <= cfg.order) break;
      cur[d] = 0;
    }
  }
  std::sort(tuples.begin(), tuples.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              const int sa = std::accumulate(a.begin(), a.end(), 0);
              const int sb = std::accumulate(b.begin(), b.end(), 0);
              if (sa != sb) return sa < sb;
              return a < b;
            });
  indices_.reserve(count * cfg.dim);
  rank_.assign(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t code = 0;
    for (int d = 0; d < cfg.dim; ++d) {
      indices_.push_back(tuples[i][d]);
      code = code * axis + std::size_t(tuples[i][d]);
    }
    rank_[code] = i;
  }

  // Basis values at the per-axis quadrature nodes, node-major.
  const std::size_t nq = std::size_t(cfg.quad_order);
  std::vector<double> rows(axis * nq);
  kernels::active().hermite_rows(cfg.order, rule_.nodes.data(), nq, rows.data());
  node_values_.resize(nq * axis);
  for (std::size_t j = 0; j < axis; ++j) {
    for (std::size_t i = 0; i < nq; ++i) {
      node_values_[i * axis + j] = rows[j * nq + i];
    }
  }

  dmat_.assign(axis * axis, 0.0);
  xmat_.assign(axis * axis, 0.0);
  for (std::size_t mdeg = 0; mdeg < axis; ++mdeg) {
    if (mdeg + 1 < axis) {
      const double up = std::sqrt((double(mdeg) + 1.0) / 2.0);
      dmat_[mdeg * axis + (mdeg + 1)] = up;
      xmat_[mdeg * axis + (mdeg + 1)] = up;
    }
    if (mdeg >= 1) {
      const double down = std::sqrt(double(mdeg) / 2.0);
      dmat_[mdeg * axis + (mdeg - 1)] = -down;
      xmat_[mdeg * axis + (mdeg - 1)] = down;
    }
  }
}

std::span<const int> Basis::multi_index(std::size_t flat) const {
  if (flat >= size()) {
    throw InputError("Basis: flat index out of range");
  }
  return {indices_.data() + flat * std::size_t(cfg_.dim), std::size_t(cfg_.dim)};
}

std::size_t Basis::flat_index(std::span<const int> alpha) const {
  if (alpha.size() != std::size_t(cfg_.dim)) {
    throw InputError("Basis: multi-index arity mismatch");
  }
  const std::size_t axis = axis_size();
  std::size_t code = 0;
  for (int d = 0; d < cfg_.dim; ++d) {
    if (alpha[d] < 0 || alpha[d] > cfg_.order) {
      throw InputError("Basis: multi-index component out of range");
    }
    code = code * axis + std::size_t(alpha[d]);
  }
  return rank_[code];
}

int Basis::max_component(std::size_t flat) const {
  const auto alpha = multi_index(flat);
  int m = 0;
  for (int v : alpha) m = std::max(m, v);
  return m;
}

std::span<const double> Basis::values_at_node(int node) const {
  return {node_values_.data() + std::size_t(node) * axis_size(), axis_size()};
}

double Basis::eval_1d(int degree, double x) const {
  if (degree < 0 || degree > cfg_.order) {
    throw InputError("eval_hermite: degree " + std::to_string(degree) +
                     " out of range [0, " + std::to_string(cfg_.order) + "]");
  }
  if (!std::isfinite(x)) {
    throw InputError("eval_hermite: non-finite point");
  }
  std::vector<double> buf(std::size_t(degree) + 1);
  kernels::active().hermite_rows(degree, &x, 1, buf.data());
  return buf[std::size_t(degree)];
}

void Basis::eval_all_1d(double x, std::span<double> out) const {
  if (out.size() < axis_size()) {
    throw InputError("Basis: output span too small");
  }
  if (!std::isfinite(x)) {
    throw InputError("Basis: non-finite point");
  }
  kernels::active().hermite_rows(cfg_.order, &x, 1, out.data());
}

double Basis::eval_multi(std::size_t flat, std::span<const double> point) const {
  const auto alpha = multi_index(flat);
  if (point.size() != std::size_t(cfg_.dim)) {
    throw InputError("Basis: point arity mismatch");
  }
  double v = 1.0;
  std::vector<double> buf(axis_size());
  for (int d = 0; d < cfg_.dim; ++d) {
    eval_all_1d(point[d], buf);
    v *= buf[std::size_t(alpha[d])];
  }
  return v;
}

std::vector<double> Basis::values_at_point(std::span<const double> point) const {
  if (point.size() != std::size_t(cfg_.dim)) {
    throw InputError("Basis: point arity mismatch");
  }
  const std::size_t axis = axis_size();
  std::vector<double> per_axis(std::size_t(cfg_.dim) * axis);
  for (int d = 0; d < cfg_.dim; ++d) {
    eval_all_1d(point[d], {per_axis.data() + std::size_t(d) * axis, axis});
  }
  std::vector<double> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto alpha = multi_index(i);
    double v = 1.0;
    for (int d = 0; d < cfg_.dim; ++d) {
      v *= per_axis[std::size_t(d) * axis + std::size_t(alpha[d])];
    }
    out[i] = v;
  }
  return out;
}

BasisPtr make_basis(const BasisConfig& cfg) {
  return std::make_shared<const Basis>(cfg);
}

double eval_hermite(const Basis& basis, int degree, double x) {
  return basis.eval_1d(degree, x);
}

const std::vector<double>& derivative_matrix(const Basis& basis) {
  return basis.derivative_matrix_1d();
}

const std::vector<double>& position_matrix(const Basis& basis) {
  return basis.position_matrix_1d();
}

int tail_threshold(int order) { return (4 * order + 4) / 5; }

double tail_residual(const Basis& basis, const Complex* data,
                     std::size_t stride, double tol) {
  const int thr = tail_threshold(basis.order());
  double total = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double e = std::norm(data[i * stride]);
    total += e;
    if (basis.max_component(i) > thr) tail += e;
  }
  if (total < tol) return 0.0;
  return tail / total;
}

void for_each_quad_node(
    const Basis& basis,
    const std::function<void(std::span<const double>, double,
                             std::span<const double>)>& fn) {
  const int dim = basis.dim();
  const std::size_t nq = std::size_t(basis.quad_order());
  const auto& rule = basis.rule();
  if (dim == 1) {
    for (std::size_t q = 0; q < nq; ++q) {
      fn({&rule.nodes[q], 1}, rule.scaled_weights[q], basis.values_at_node(int(q)));
    }
    return;
  }
  std::vector<std::size_t> digit(std::size_t(dim), 0);
  std::vector<double> point(std::size_t(dim), 0.0);
  std::vector<double> row(basis.size());
  for (;;) {
    double w = 1.0;
    for (int d = 0; d < dim; ++d) {
      point[std::size_t(d)] = rule.nodes[digit[std::size_t(d)]];
      w *= rule.scaled_weights[digit[std::size_t(d)]];
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto alpha = basis.multi_index(i);
      double v = 1.0;
      for (int d = 0; d < dim; ++d) {
        v *= basis.values_at_node(int(digit[std::size_t(d)]))[std::size_t(alpha[d])];
      }
      row[i] = v;
    }
    fn(point, w, row);
    int d = dim - 1;
    for (; d >= 0; --d) {
      if (++digit[std::size_t(d)] < nq) break;
      digit[std::size_t(d)] = 0;
    }
    if (d < 0) break;
  }
}

FitResult fit_function(const Basis& basis, const ScalarField& f) {
  if (!f) {
    throw InputError("fit_function: empty function");
  }
  FitResult out;
  out.coeffs.assign(basis.size(), Complex(0.0, 0.0));
  const auto& ops = kernels::active();
  for_each_quad_node(basis, [&](std::span<const double> point, double w,
                                std::span<const double> row) {
    const Complex fv = f(point);
    if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) {
      throw InputError("fit_function: non-finite sample value");
    }
    ops.zraxpy(out.coeffs.size(), w * fv, row.data(), out.coeffs.data());
  });
  out.residual =
      tail_residual(basis, out.coeffs.data(), 1, basis.config().tol);
  return out;
}

}  // namespace slin
