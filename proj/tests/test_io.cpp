#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "slin/io.hpp"

using namespace slin;

namespace {

BasisPtr small_basis(int dim, int order) {
  BasisConfig cfg;
  cfg.dim = dim;
  cfg.order = order;
  cfg.quad_order = std::max(80, 2 * order + 2);
  return make_basis(cfg);
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("distribution and test function round trips are byte stable") {
  const BasisPtr basis = small_basis(1, 8);
  Rng rng(21);
  const TemperedDistribution u = random_distribution(basis, rng);
  const std::string s1 = serialize_distribution(u);
  const TemperedDistribution v = parse_distribution(s1);
  CHECK(v.basis()->order() == 8);
  CHECK(v.basis()->quad_order() == 80);
  CHECK(max_abs_diff(u.duals(), v.duals()) == 0.0);
  CHECK(serialize_distribution(v) == s1);

  const TestFunction phi = random_test_function(basis, rng);
  const std::string s2 = serialize_test_function(phi);
  const TestFunction psi = parse_test_function(s2);
  CHECK(max_abs_diff(phi.coeffs(), psi.coeffs()) == 0.0);
  CHECK(serialize_test_function(psi) == s2);

  // negative zero survives
  std::vector<Complex> z(basis->size(), Complex(0.0, 0.0));
  z[0] = Complex(-0.0, 1e308);
  const std::string s3 = serialize_distribution(TemperedDistribution(basis, z));
  CHECK(serialize_distribution(parse_distribution(s3)) == s3);
}

TEST_CASE("family and operator round trips") {
  const BasisPtr index = small_basis(1, 6);
  const BasisPtr value = small_basis(2, 6);
  Rng rng(22);
  const SFamily v = random_family(index, value, rng);
  const std::string s = serialize_family(v);
  const SFamily w = parse_family(s);
  CHECK(w.index_basis()->dim() == 1);
  CHECK(w.value_basis()->dim() == 2);
  CHECK(max_abs_diff(v.matrix(), w.matrix()) == 0.0);
  CHECK(serialize_family(w) == s);

  const SLinearOperator L = random_operator(value, index, rng);
  const std::string so = serialize_operator(L);
  const SLinearOperator M = parse_operator(so);
  CHECK(M.src_basis()->dim() == 2);
  CHECK(M.dst_basis()->dim() == 1);
  CHECK(max_abs_diff(L.b_matrix(), M.b_matrix()) == 0.0);
  CHECK(serialize_operator(M) == so);
}

TEST_CASE("writers emit the documented schemas") {
  const BasisPtr basis = small_basis(1, 2);
  std::vector<Complex> du = {{0.5, 0.0}, {0.0, -1.0}, {2.0, 0.25}};
  const std::string s = serialize_distribution(TemperedDistribution(basis, du));
  CHECK(s ==
        "{\"kind\":\"distribution\",\"dim\":1,\"order\":2,"
        "\"coeffs\":[[0.5,0],[0,-1],[2,0.25]]}");

  const nlohmann::json j = nlohmann::json::parse(s);
  CHECK(j["kind"] == "distribution");
  CHECK(j["coeffs"].size() == 3);
}

TEST_CASE("report serialization is canonical") {
  BasisConfig cfg;
  cfg.order = 8;
  cfg.quad_order = 20;
  VerificationReport r;
  r.config = cfg;
  r.results.push_back(
      make_check_result("demo", "a = b, c", 1.25e-13, 1e-12, 3, 42));
  r.overall = true;

  const std::string s = serialize_report(r);
  CHECK(s ==
        "{\"config\":{\"dim\":1,\"order\":8,\"quad_order\":20,\"tol\":1e-10,"
        "\"tail_fraction\":1e-08},\"results\":[{\"name\":\"demo\","
        "\"paper_anchor\":\"a = b, c\",\"max_abs_error\":1.25e-13,"
        "\"tolerance\":9.9999999999999998e-13,\"passed\":true,\"trials\":3,"
        "\"seed\":42}],\"overall\":true}");

  const std::string csv = serialize_report_csv(r);
  CHECK(csv == "demo,\"a = b, c\",1.25e-13,9.9999999999999998e-13,1\n");
}

TEST_CASE("parser rejects malformed payloads") {
  CHECK_THROWS_AS(parse_distribution("not json"), InputError);
  CHECK_THROWS_AS(parse_distribution("[1,2]"), InputError);
  CHECK_THROWS_AS(parse_distribution(
                      "{\"kind\":\"s_family\",\"dim\":1,\"order\":2,\"coeffs\":[]}"),
                  InputError);
  CHECK_THROWS_AS(parse_distribution(
                      "{\"kind\":\"distribution\",\"dim\":1,\"order\":2,"
                      "\"coeffs\":[[0,0]]}"),
                  InputError);  // wrong length
  CHECK_THROWS_AS(parse_distribution(
                      "{\"kind\":\"distribution\",\"dim\":1,\"coeffs\":[]}"),
                  InputError);  // no order
  CHECK_THROWS_AS(parse_operator(
                      "{\"kind\":\"s_linear_operator\",\"src_dim\":1,"
                      "\"dst_dim\":1,\"order\":1,\"b_matrix\":[[[0,0]]]}"),
                  InputError);  // 1x1 instead of 2x2
  CHECK_THROWS_AS(parse_distribution(
                      "{\"kind\":\"distribution\",\"dim\":0,\"order\":2,"
                      "\"coeffs\":[]}"),
                  ConfigError);  // bad basis parameters
}

TEST_CASE("file helpers") {
  const std::string path = "io_test_scratch.json";
  write_file(path, "{\"x\":1}");
  CHECK(read_file(path) == "{\"x\":1}");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_file("definitely_missing_file.json"), InputError);
}
