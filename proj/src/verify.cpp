#include "slin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "slin/linalg.hpp"

namespace slin {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kHuge = 1e308;

double inf_norm(std::span<const Complex> a) {
  double m = 0.0;
  for (const Complex& v : a) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double rel_diff(std::span<const Complex> a, std::span<const Complex> b) {
  const double scale = std::max({1.0, inf_norm(a), inf_norm(b)});
  return max_abs_diff(a, b) / scale;
}

struct Accum {
  double err = 0.0;
  int trials = 0;
  void add(const CheckResult& r) {
    err = std::max(err, r.max_abs_error);
    trials += r.trials;
  }
  void add(double e, int t) {
    err = std::max(err, e);
    trials += t;
  }
};

}  // namespace

double Rng::uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = (double(engine_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = double(engine_() >> 11) * 0x1.0p-53;          // [0, 1)
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = kTwoPi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::cgauss() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

namespace {

std::vector<Complex> random_vector(std::size_t n, Rng& rng) {
  std::vector<Complex> v(n);
  for (Complex& c : v) c = rng.cgauss();
  return v;
}

}  // namespace

TemperedDistribution random_distribution(const BasisPtr& basis, Rng& rng) {
  return TemperedDistribution(basis, random_vector(basis->size(), rng));
}

TestFunction random_test_function(const BasisPtr& basis, Rng& rng) {
  return TestFunction(basis, random_vector(basis->size(), rng));
}

SFamily random_family(const BasisPtr& index_basis, const BasisPtr& value_basis,
                      Rng& rng) {
  return SFamily(index_basis, value_basis,
                 random_vector(index_basis->size() * value_basis->size(), rng));
}

SLinearOperator random_operator(const BasisPtr& src_basis,
                                const BasisPtr& dst_basis, Rng& rng) {
  return SLinearOperator(
      src_basis, dst_basis,
      random_vector(src_basis->size() * dst_basis->size(), rng));
}

CheckResult make_check_result(std::string name, std::string anchor, double err,
                              double tol, int trials, std::uint64_t seed) {
  if (!std::isfinite(err)) err = kHuge;
  CheckResult r;
  r.name = std::move(name);
  r.paper_anchor = std::move(anchor);
  r.max_abs_error = err;
  r.tolerance = tol;
  r.passed = err <= tol;
  r.trials = trials;
  r.seed = seed;
  return r;
}

CheckResult check_s_linearity(const SLinearOperator& L, const SFamily& v,
                              const TemperedDistribution& a, double tol) {
  const TemperedDistribution lhs = apply(L, superpose(a, v));
  const TemperedDistribution rhs = superpose(a, image_family(L, v));
  return make_check_result("s_linearity", "L(int(a v)) = int(a L(v))",
                           rel_diff(lhs.duals(), rhs.duals()), tol, 1, 0);
}

CheckResult check_additivity(const SLinearOperator& L, int trials,
                             std::uint64_t seed, double tol) {
  Rng rng(seed);
  double err = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Complex a = rng.cgauss();
    const Complex b = rng.cgauss();
    const TemperedDistribution u = random_distribution(L.src_basis(), rng);
    const TemperedDistribution w = random_distribution(L.src_basis(), rng);
    const TemperedDistribution lhs =
        apply(L, dist_add(dist_scale(a, u), dist_scale(b, w)));
    const TemperedDistribution rhs =
        dist_add(dist_scale(a, apply(L, u)), dist_scale(b, apply(L, w)));
    err = std::max(err, rel_diff(lhs.duals(), rhs.duals()));
  }
  return make_check_result("additivity", "L(a u + b w) = a L(u) + b L(w)", err,
                           tol, trials, seed);
}

CheckResult check_dirac_expansion(const TemperedDistribution& u) {
  const TemperedDistribution lhs = superpose(u, dirac_family(u.basis()));
  return make_check_result("dirac_expansion", "u = int(u delta)",
                           max_abs_diff(lhs.duals(), u.duals()), kExactTol, 1,
                           0);
}

CheckResult check_derivative_formula(const TemperedDistribution& u,
                                     double tol) {
  const BasisPtr& basis = u.basis();
  std::vector<int> first(std::size_t(basis->dim()), 0);
  first[0] = 1;
  const TemperedDistribution lhs =
      superpose(u, dirac_derivative_family(basis, first));
  const TemperedDistribution rhs = apply(derivative_operator(basis, 0), u);
  // compare away from the truncation band
  const int cutoff = basis->order() - 2;
  double err = 0.0, scale = 1.0;
  for (std::size_t i = 0; i < basis->size(); ++i) {
    if (basis->max_component(i) > cutoff) continue;
    err = std::max(err, std::abs(lhs.duals()[i] - rhs.duals()[i]));
    scale = std::max({scale, std::abs(lhs.duals()[i]), std::abs(rhs.duals()[i])});
  }
  return make_check_result("derivative_formula", "u' = int(u delta')",
                           err / scale, tol, 1, 0);
}

CheckResult check_transpose_lemma(const SLinearOperator& tB, const SFamily& v) {
  const SFamily lhs = image_family(tB, v);
  const SFamily rhs = family_product(v, generated_family(tB));
  return make_check_result("transpose_lemma", "tB(v) = int(v B_vee)",
                           max_abs_diff(lhs.matrix(), rhs.matrix()), kExactTol,
                           1, 0);
}

CheckResult check_characterization_roundtrip(const SLinearOperator& L) {
  const SLinearOperator rebuilt = operator_from_dirac_image(L);
  return make_check_result("characterization_roundtrip", "L = t((L delta)^)",
                           max_abs_diff(rebuilt.b_matrix(), L.b_matrix()),
                           kExactTol, 1, 0);
}

std::array<CheckResult, 2> check_superposition_composition(const SFamily& v,
                                                           const SFamily& w) {
  const SFamily prod = family_product(v, w);
  std::vector<Complex> direct(v.rows() * w.cols());
  kernels::gemm_nn(v.rows(), v.cols(), w.cols(), v.matrix().data(),
                   w.matrix().data(), direct.data());
  const double merr = max_abs_diff(prod.matrix(), direct);

  const auto& rule = v.index_basis()->rule();
  const std::size_t nq = rule.nodes.size();
  const std::size_t count = std::min<std::size_t>(10, nq);
  const std::size_t start = (nq - count) / 2;
  double perr = 0.0;
  std::vector<double> p(std::size_t(v.index_basis()->dim()));
  for (std::size_t j = 0; j < count; ++j) {
    std::fill(p.begin(), p.end(), rule.nodes[start + j]);
    const TemperedDistribution lhs = member(prod, p);
    const TemperedDistribution rhs = superpose(member(v, p), w);
    perr = std::max(perr, rel_diff(lhs.duals(), rhs.duals()));
  }
  return {make_check_result("composition_matrix", "(int(v w))^ = v^ o w^",
                            merr, kExactTol, 1, 0),
          make_check_result("composition_pointwise", "(int(v w))^ = v^ o w^",
                            perr, kPointwiseTol, int(count), 0)};
}

CheckResult check_hull_duality(const SLinearOperator& L, const SFamily& v,
                               const TestFunction& h, int sample_count) {
  require_same_config(v.index_basis(), v.value_basis(),
                      "check_hull_duality: family index/value");
  require_same_config(L.src_basis(), v.value_basis(),
                      "check_hull_duality: operator source");
  require_same_config(L.dst_basis(), h.basis(),
                      "check_hull_duality: test function");
  const std::size_t n = v.rows();
  const LuDecomposition f = lu_factor(v.matrix(), n);
  double cond = std::numeric_limits<double>::infinity();
  if (!f.singular) {
    cond = matrix_norm1(v.matrix(), n) * matrix_norm1(lu_inverse(f), n);
  }
  if (!(cond <= kConditionBound)) {
    throw IllConditionedBasis(
        "check_hull_duality: family matrix condition estimate " +
            std::to_string(cond) + " exceeds " +
            std::to_string(kConditionBound),
        cond);
  }

  // T(h) = v_inv(L(v)(h)) on the value basis
  const SFamily img = image_family(L, v);
  std::vector<Complex> th(img.rows());
  kernels::gemv_n(img.rows(), img.cols(), img.matrix().data(),
                  h.coeffs().data(), th.data());
  lu_solve(f, th.data());
  const TestFunction t_of_h(v.value_basis(), std::move(th));

  const auto& rule = v.index_basis()->rule();
  const std::size_t nq = rule.nodes.size();
  if (sample_count < 1 || std::size_t(sample_count) > nq) {
    throw InputError("check_hull_duality: sample count out of range");
  }
  const std::size_t start = (nq - std::size_t(sample_count)) / 2;
  double err = 0.0;
  std::vector<double> p(std::size_t(v.index_basis()->dim()));
  for (int j = 0; j < sample_count; ++j) {
    std::fill(p.begin(), p.end(), rule.nodes[start + std::size_t(j)]);
    const TemperedDistribution uq = member(v, p);
    const Complex lhs = pair(uq, t_of_h);
    const Complex rhs = pair(apply(L, uq), h);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    err = std::max(err, std::abs(lhs - rhs) / scale);
  }
  return make_check_result("hull_duality", "<u, T(h)> = <L(u), h>", err,
                           kQuadratureTol, sample_count, 0);
}

VerificationReport run_suite(const BasisConfig& config, std::uint64_t seed) {
  const BasisPtr basis = make_basis(config);
  VerificationReport report;
  report.config = config;

  const std::vector<double> origin(std::size_t(config.dim), 0.0);
  const auto embed_basis_fn = [&](std::size_t flat) {
    return embed_function(basis, [&, flat](std::span<const double> x) {
      return Complex(basis->eval_multi(flat, x), 0.0);
    });
  };
  const std::size_t lowfn = std::min<std::size_t>(3, basis->size() - 1);

  const auto guarded = [&](const std::string& name, const std::string& anchor,
                           double tol, std::uint64_t s, auto&& body) {
    try {
      body();
    } catch (const std::exception&) {
      report.results.push_back(make_check_result(
          name, anchor, std::numeric_limits<double>::infinity(), tol, 0, s));
    }
  };

  // 0: S-linearity
  guarded("s_linearity", "L(int(a v)) = int(a L(v))", kReassocTol, seed + 0,
          [&] {
            Accum acc;
            acc.add(check_s_linearity(identity_operator(basis),
                                      dirac_family(basis),
                                      dirac_at(basis, origin)));
            Rng rng(seed + 0);
            for (int t = 0; t < 50; ++t) {
              acc.add(check_s_linearity(random_operator(basis, basis, rng),
                                        random_family(basis, basis, rng),
                                        random_distribution(basis, rng)));
            }
            report.results.push_back(
                make_check_result("s_linearity", "L(int(a v)) = int(a L(v))",
                                  acc.err, kReassocTol, acc.trials, seed + 0));
          });

  // 1: additivity
  guarded("additivity", "L(a u + b w) = a L(u) + b L(w)", kReassocTol,
          seed + 1, [&] {
            Accum acc;
            acc.add(
                check_additivity(derivative_operator(basis), 10, seed + 1));
            Rng rng(seed + 1);
            acc.add(check_additivity(random_operator(basis, basis, rng), 50,
                                     seed + 1));
            report.results.push_back(make_check_result(
                "additivity", "L(a u + b w) = a L(u) + b L(w)", acc.err,
                kReassocTol, acc.trials, seed + 1));
          });

  // 2: Dirac expansion
  guarded("dirac_expansion", "u = int(u delta)", kExactTol, seed + 2, [&] {
    Accum acc;
    acc.add(check_dirac_expansion(dirac_at(basis, origin)));
    acc.add(check_dirac_expansion(embed_basis_fn(lowfn)));
    Rng rng(seed + 2);
    for (int t = 0; t < 20; ++t) {
      acc.add(check_dirac_expansion(random_distribution(basis, rng)));
    }
    report.results.push_back(make_check_result("dirac_expansion",
                                               "u = int(u delta)", acc.err,
                                               kExactTol, acc.trials, seed + 2));
  });

  // 3: derivative formula
  guarded("derivative_formula", "u' = int(u delta')", kReassocTol, seed + 3,
          [&] {
            Accum acc;
            acc.add(check_derivative_formula(embed_basis_fn(0)));
            acc.add(check_derivative_formula(embed_basis_fn(lowfn)));
            acc.add(check_derivative_formula(dirac_at(basis, origin)));
            Rng rng(seed + 3);
            for (int t = 0; t < 10; ++t) {
              acc.add(check_derivative_formula(random_distribution(basis, rng)));
            }
            report.results.push_back(make_check_result(
                "derivative_formula", "u' = int(u delta')", acc.err,
                kReassocTol, acc.trials, seed + 3));
          });

  // 4: transpose lemma
  guarded("transpose_lemma", "tB(v) = int(v B_vee)", kExactTol, seed + 4, [&] {
    Accum acc;
    acc.add(check_transpose_lemma(identity_operator(basis), dirac_family(basis)));
    acc.add(
        check_transpose_lemma(derivative_operator(basis), dirac_family(basis)));
    Rng rng(seed + 4);
    for (int t = 0; t < 20; ++t) {
      acc.add(check_transpose_lemma(random_operator(basis, basis, rng),
                                    random_family(basis, basis, rng)));
    }
    report.results.push_back(make_check_result("transpose_lemma",
                                               "tB(v) = int(v B_vee)", acc.err,
                                               kExactTol, acc.trials, seed + 4));
  });

  // 5: characterization roundtrip
  guarded("characterization_roundtrip", "L = t((L delta)^)", kExactTol,
          seed + 5, [&] {
            Accum acc;
            acc.add(check_characterization_roundtrip(identity_operator(basis)));
            acc.add(check_characterization_roundtrip(derivative_operator(basis)));
            acc.add(check_characterization_roundtrip(fourier_operator(basis)));
            Rng rng(seed + 5);
            for (int t = 0; t < 20; ++t) {
              acc.add(check_characterization_roundtrip(
                  random_operator(basis, basis, rng)));
            }
            report.results.push_back(make_check_result(
                "characterization_roundtrip", "L = t((L delta)^)", acc.err,
                kExactTol, acc.trials, seed + 5));
          });

  // 6: composition of superpositions, matrix and pointwise rows
  guarded("composition_matrix", "(int(v w))^ = v^ o w^", kExactTol, seed + 6,
          [&] {
            Accum mat, pt;
            auto both = check_superposition_composition(dirac_family(basis),
                                                        dirac_family(basis));
            mat.add(both[0]);
            pt.add(both[1]);
            Rng rng(seed + 6);
            for (int t = 0; t < 20; ++t) {
              both = check_superposition_composition(
                  random_family(basis, basis, rng),
                  random_family(basis, basis, rng));
              mat.add(both[0]);
              pt.add(both[1]);
            }
            report.results.push_back(make_check_result(
                "composition_matrix", "(int(v w))^ = v^ o w^", mat.err,
                kExactTol, mat.trials, seed + 6));
            report.results.push_back(make_check_result(
                "composition_pointwise", "(int(v w))^ = v^ o w^", pt.err,
                kPointwiseTol, pt.trials, seed + 6));
          });

  // 7: duality on the hull of a near-identity family
  guarded("hull_duality", "<u, T(h)> = <L(u), h>", kQuadratureTol, seed + 7,
          [&] {
            Rng rng(seed + 7);
            const std::size_t n = basis->size();
            std::vector<Complex> m(n * n);
            for (std::size_t i = 0; i < n * n; ++i) {
              m[i] = 0.01 * rng.cgauss();
            }
            for (std::size_t i = 0; i < n; ++i) m[i * n + i] += 1.0;
            const SFamily v(basis, basis, std::move(m));
            const SLinearOperator L = derivative_operator(basis);
            const int count = int(std::min<std::size_t>(10, basis->rule().nodes.size()));
            Accum acc;
            acc.add(check_hull_duality(
                L, v, basis_function(basis, std::min<std::size_t>(2, n - 1)),
                count));
            acc.add(check_hull_duality(L, v, random_test_function(basis, rng),
                                       count));
            report.results.push_back(make_check_result(
                "hull_duality", "<u, T(h)> = <L(u), h>", acc.err,
                kQuadratureTol, acc.trials, seed + 7));
          });

  report.overall = true;
  for (const CheckResult& r : report.results) report.overall &= r.passed;
  return report;
}

}  // namespace slin
