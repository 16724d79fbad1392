#include "slin/distribution.hpp"

#include <cmath>
#include <string>

namespace slin {

namespace {

void require_size(const BasisPtr& basis, std::size_t got, const char* where) {
  if (!basis) throw ConfigError(std::string(where) + ": null basis");
  if (got != basis->size()) {
    throw ConfigError(std::string(where) + ": coefficient count " +
                      std::to_string(got) + " does not match basis size " +
                      std::to_string(basis->size()));
  }
}

}  // namespace

void require_same_config(const BasisPtr& a, const BasisPtr& b,
                         const char* where) {
  if (!a || !b) throw ConfigError(std::string(where) + ": null basis");
  if (!(a->config() == b->config())) {
    throw ConfigError(std::string(where) + ": basis configurations differ");
  }
}

void require_finite(std::span<const Complex> values, const char* where) {
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InputError(std::string(where) + ": non-finite entry");
    }
  }
}

TestFunction::TestFunction(BasisPtr basis, std::vector<Complex> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  require_size(basis_, coeffs_.size(), "TestFunction");
  require_finite(coeffs_, "TestFunction");
}

TemperedDistribution::TemperedDistribution(BasisPtr basis,
                                           std::vector<Complex> duals)
    : basis_(std::move(basis)), duals_(std::move(duals)) {
  require_size(basis_, duals_.size(), "TemperedDistribution");
  require_finite(duals_, "TemperedDistribution");
}

Complex pair(const TemperedDistribution& u, const TestFunction& phi) {
  require_same_config(u.basis(), phi.basis(), "pair");
  return kernels::active().zdotu(u.duals().size(), u.duals().data(),
                                 phi.coeffs().data());
}

Complex eval(const TestFunction& phi, std::span<const double> point) {
  const std::vector<double> row = phi.basis()->values_at_point(point);
  return kernels::active().zrdot(row.size(), row.data(), phi.coeffs().data());
}

TemperedDistribution dirac_at(const BasisPtr& basis,
                              std::span<const double> x) {
  if (!basis) throw ConfigError("dirac_at: null basis");
  for (double c : x) {
    if (!std::isfinite(c)) throw InputError("dirac_at: non-finite point");
  }
  const std::vector<double> row = basis->values_at_point(x);
  std::vector<Complex> duals(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) duals[i] = Complex(row[i], 0.0);
  return TemperedDistribution(basis, std::move(duals));
}

TemperedDistribution embed_function(const BasisPtr& basis,
                                    const ScalarField& f) {
  if (!basis) throw ConfigError("embed_function: null basis");
  FitResult fit = fit_function(*basis, f);
  return TemperedDistribution(basis, std::move(fit.coeffs));
}

TestFunction basis_function(const BasisPtr& basis, std::size_t flat) {
  if (!basis) throw ConfigError("basis_function: null basis");
  if (flat >= basis->size()) {
    throw InputError("basis_function: index out of range");
  }
  std::vector<Complex> coeffs(basis->size(), Complex(0.0, 0.0));
  coeffs[flat] = Complex(1.0, 0.0);
  return TestFunction(basis, std::move(coeffs));
}

TemperedDistribution dist_add(const TemperedDistribution& u,
                              const TemperedDistribution& w) {
  require_same_config(u.basis(), w.basis(), "dist_add");
  std::vector<Complex> duals = u.duals();
  kernels::active().zaxpy(duals.size(), Complex(1.0, 0.0), w.duals().data(),
                          duals.data());
  return TemperedDistribution(u.basis(), std::move(duals));
}

TemperedDistribution dist_scale(Complex c, const TemperedDistribution& u) {
  std::vector<Complex> duals = u.duals();
  kernels::active().zscal(duals.size(), c, duals.data());
  return TemperedDistribution(u.basis(), std::move(duals));
}

TestFunction fn_add(const TestFunction& phi, const TestFunction& psi) {
  require_same_config(phi.basis(), psi.basis(), "fn_add");
  std::vector<Complex> coeffs = phi.coeffs();
  kernels::active().zaxpy(coeffs.size(), Complex(1.0, 0.0),
                          psi.coeffs().data(), coeffs.data());
  return TestFunction(phi.basis(), std::move(coeffs));
}

TestFunction fn_scale(Complex c, const TestFunction& phi) {
  std::vector<Complex> coeffs = phi.coeffs();
  kernels::active().zscal(coeffs.size(), c, coeffs.data());
  return TestFunction(phi.basis(), std::move(coeffs));
}

}  // namespace slin
