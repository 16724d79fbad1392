#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "slin/io.hpp"
#include "slin/linalg.hpp"
#include "slin/verify.hpp"

using namespace slin;

namespace {

BasisConfig small_config() {
  BasisConfig cfg;
  cfg.order = 8;
  cfg.quad_order = 20;
  return cfg;
}

}  // namespace

TEST_CASE("rng stream is deterministic and reasonably gaussian") {
  Rng a(7), b(7);
  for (int i = 0; i < 64; ++i) {
    CHECK(a.gaussian() == b.gaussian());
    CHECK(a.uniform() == b.uniform());
  }
  Rng c(7);
  double mean = 0.0, var = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = c.gaussian();
    mean += x;
    var += x * x;
  }
  mean /= n;
  var = var / n - mean * mean;
  CHECK(std::abs(mean) < 0.05);
  CHECK(std::abs(var - 1.0) < 0.05);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("individual checks pass on canonical instances") {
  const BasisPtr basis = make_basis(small_config());
  Rng rng(3);

  const CheckResult lin = check_s_linearity(random_operator(basis, basis, rng),
                                            random_family(basis, basis, rng),
                                            random_distribution(basis, rng));
  CHECK(lin.passed);
  CHECK(lin.max_abs_error <= 1e-13);

  const CheckResult add = check_additivity(derivative_operator(basis), 5, 11);
  CHECK(add.passed);
  CHECK(add.trials == 5);

  const CheckResult dirac = check_dirac_expansion(random_distribution(basis, rng));
  CHECK(dirac.passed);
  CHECK(dirac.max_abs_error == 0.0);
  CHECK(dirac.tolerance == 0.0);

  const CheckResult deriv = check_derivative_formula(random_distribution(basis, rng));
  CHECK(deriv.passed);

  const CheckResult trans = check_transpose_lemma(random_operator(basis, basis, rng),
                                                  random_family(basis, basis, rng));
  CHECK(trans.passed);
  CHECK(trans.max_abs_error == 0.0);

  const CheckResult charac =
      check_characterization_roundtrip(random_operator(basis, basis, rng));
  CHECK(charac.passed);
  CHECK(charac.max_abs_error == 0.0);

  const auto comp = check_superposition_composition(random_family(basis, basis, rng),
                                                    random_family(basis, basis, rng));
  CHECK(comp[0].passed);
  CHECK(comp[0].max_abs_error == 0.0);
  CHECK(comp[1].passed);
  CHECK(comp[1].tolerance == kPointwiseTol);
}

TEST_CASE("hull duality check and its guards") {
  const BasisPtr basis = make_basis(small_config());
  const std::size_t n = basis->size();
  Rng rng(5);
  std::vector<Complex> m(n * n);
  for (Complex& c : m) c = 0.01 * rng.cgauss();
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] += 1.0;
  const SFamily v(basis, basis, m);

  const CheckResult dual = check_hull_duality(
      derivative_operator(basis), v, basis_function(basis, 2), 10);
  CHECK(dual.passed);
  CHECK(dual.trials == 10);

  CHECK_THROWS_AS(check_hull_duality(derivative_operator(basis), v,
                                     basis_function(basis, 2), 0),
                  InputError);

  const SFamily singular(basis, basis, std::vector<Complex>(n * n));
  CHECK_THROWS_AS(check_hull_duality(derivative_operator(basis), singular,
                                     basis_function(basis, 2), 4),
                  IllConditionedBasis);
}

TEST_CASE("a tampered family is detected at the reassociation tolerance") {
  const BasisPtr basis = make_basis(small_config());
  const std::size_t n = basis->size();
  std::vector<Complex> m(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
  m[0] += 1e-3;  // perturb one matrix entry of the would-be dirac family
  const SFamily tampered(basis, basis, m);

  Rng rng(9);
  const TemperedDistribution u = random_distribution(basis, rng);
  const TemperedDistribution back = superpose(u, tampered);
  double err = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    err = std::max(err, std::abs(back.duals()[j] - u.duals()[j]));
  }
  const CheckResult r =
      make_check_result("control", "u = int(u delta)", err, kReassocTol, 1, 9);
  CHECK_FALSE(r.passed);
  CHECK(r.max_abs_error >= 1e-4);

  // the same perturbation pushed through an operator's dirac image
  const SLinearOperator near_id(basis, basis, m);
  const SFamily img = image_family(near_id, dirac_family(basis));
  double ierr = 0.0;
  for (std::size_t j = 0; j < n * n; ++j) {
    ierr = std::max(ierr,
                    std::abs(img.matrix()[j] - dirac_family(basis).matrix()[j]));
  }
  CHECK(ierr >= 1e-4);
}

TEST_CASE("non finite errors clamp to a failing result") {
  const CheckResult r = make_check_result(
      "x", "y", std::numeric_limits<double>::quiet_NaN(), 1e-8, 1, 0);
  CHECK_FALSE(r.passed);
  CHECK(std::isfinite(r.max_abs_error));
  const CheckResult s = make_check_result(
      "x", "y", std::numeric_limits<double>::infinity(), 1e-8, 1, 0);
  CHECK_FALSE(s.passed);
}

TEST_CASE("run_suite passes and is deterministic") {
  const BasisConfig cfg = small_config();
  const VerificationReport r1 = run_suite(cfg, 0);
  CHECK(r1.overall);
  REQUIRE(r1.results.size() == 9);
  const char* names[9] = {"s_linearity",
                          "additivity",
                          "dirac_expansion",
                          "derivative_formula",
                          "transpose_lemma",
                          "characterization_roundtrip",
                          "composition_matrix",
                          "composition_pointwise",
                          "hull_duality"};
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(r1.results[i].name == names[i]);
    CHECK(r1.results[i].passed);
    CHECK(r1.results[i].trials > 0);
    CHECK_FALSE(r1.results[i].paper_anchor.empty());
  }
  CHECK(r1.results[2].max_abs_error == 0.0);
  CHECK(r1.results[4].max_abs_error == 0.0);
  CHECK(r1.results[5].max_abs_error == 0.0);
  CHECK(r1.results[6].max_abs_error == 0.0);

  const VerificationReport r2 = run_suite(cfg, 0);
  CHECK(serialize_report(r1) == serialize_report(r2));

  const VerificationReport r3 = run_suite(cfg, 1);
  CHECK(r3.overall);  // different seed still satisfies every identity
}

TEST_CASE("run_suite works in two dimensions") {
  BasisConfig cfg;
  cfg.dim = 2;
  cfg.order = 4;
  cfg.quad_order = 10;
  const VerificationReport r = run_suite(cfg, 0);
  CHECK(r.overall);
}

TEST_CASE("condition number estimate flags singular matrices") {
  const std::vector<Complex> id = {{1, 0}, {0, 0}, {0, 0}, {1, 0}};
  CHECK(condition_1norm(id, 2) == doctest::Approx(1.0).epsilon(1e-14));
  const std::vector<Complex> sing = {{1, 0}, {2, 0}, {2, 0}, {4, 0}};
  CHECK(std::isinf(condition_1norm(sing, 2)));
  const std::vector<Complex> scale = {{4, 0}, {0, 0}, {0, 0}, {1, 0}};
  CHECK(condition_1norm(scale, 2) == doctest::Approx(4.0).epsilon(1e-14));
}
