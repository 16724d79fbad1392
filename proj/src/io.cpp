#include "slin/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "slin/errors.hpp"

namespace slin {

namespace {

using nlohmann::json;

void append_double(std::string& out, double x) {
  if (!std::isfinite(x)) x = x > 0 ? 1e308 : (x < 0 ? -1e308 : 0.0);
  if (x == 0.0 && std::signbit(x)) {
    // "%.17g" prints "-0", which JSON parsers read back as integer zero
    out += "-0.0";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void append_complex(std::string& out, const Complex& z) {
  out += '[';
  append_double(out, z.real());
  out += ',';
  append_double(out, z.imag());
  out += ']';
}

void append_complex_list(std::string& out, std::span<const Complex> v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    append_complex(out, v[i]);
  }
  out += ']';
}

void append_complex_rows(std::string& out, std::span<const Complex> m,
                         std::size_t rows, std::size_t cols) {
  out += '[';
  for (std::size_t r = 0; r < rows; ++r) {
    if (r) out += ',';
    append_complex_list(out, m.subspan(r * cols, cols));
  }
  out += ']';
}

void append_string(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

BasisPtr basis_from(int dim, int order) {
  BasisConfig cfg;
  cfg.dim = dim;
  cfg.order = order;
  cfg.quad_order = std::max(80, 2 * order + 2);
  return make_basis(cfg);
}

json parse_text(const std::string& text, const char* where) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw InputError(std::string(where) + ": malformed JSON");
  }
  return j;
}

void require_kind(const json& j, const char* kind, const char* where) {
  if (!j.contains("kind") || !j["kind"].is_string() ||
      j["kind"].get<std::string>() != kind) {
    throw InputError(std::string(where) + ": expected kind \"" + kind + "\"");
  }
}

int int_field(const json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw InputError(std::string(where) + ": missing integer field \"" + key +
                     "\"");
  }
  return j[key].get<int>();
}

Complex complex_field(const json& e, const char* where) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
      !e[1].is_number()) {
    throw InputError(std::string(where) + ": entries must be [re, im] pairs");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

std::vector<Complex> complex_list(const json& a, std::size_t expect,
                                  const char* where) {
  if (!a.is_array() || a.size() != expect) {
    throw InputError(std::string(where) + ": expected " +
                     std::to_string(expect) + " entries");
  }
  std::vector<Complex> v;
  v.reserve(expect);
  for (const json& e : a) v.push_back(complex_field(e, where));
  return v;
}

std::vector<Complex> complex_rows(const json& a, std::size_t rows,
                                  std::size_t cols, const char* where) {
  if (!a.is_array() || a.size() != rows) {
    throw InputError(std::string(where) + ": expected " +
                     std::to_string(rows) + " rows");
  }
  std::vector<Complex> m;
  m.reserve(rows * cols);
  for (const json& row : a) {
    std::vector<Complex> r = complex_list(row, cols, where);
    m.insert(m.end(), r.begin(), r.end());
  }
  return m;
}

std::string vector_payload(const char* kind, const BasisPtr& basis,
                           std::span<const Complex> values) {
  std::string out = "{\"kind\":\"";
  out += kind;
  out += "\",\"dim\":";
  out += std::to_string(basis->dim());
  out += ",\"order\":";
  out += std::to_string(basis->order());
  out += ",\"coeffs\":";
  append_complex_list(out, values);
  out += '}';
  return out;
}

}  // namespace

std::string serialize_test_function(const TestFunction& phi) {
  return vector_payload("test_function", phi.basis(), phi.coeffs());
}

std::string serialize_distribution(const TemperedDistribution& u) {
  return vector_payload("distribution", u.basis(), u.duals());
}

std::string serialize_family(const SFamily& v) {
  if (v.index_basis()->order() != v.value_basis()->order()) {
    throw InputError("serialize_family: index and value orders differ");
  }
  std::string out = "{\"kind\":\"s_family\",\"index_dim\":";
  out += std::to_string(v.index_basis()->dim());
  out += ",\"value_dim\":";
  out += std::to_string(v.value_basis()->dim());
  out += ",\"order\":";
  out += std::to_string(v.index_basis()->order());
  out += ",\"matrix\":";
  append_complex_rows(out, v.matrix(), v.rows(), v.cols());
  out += '}';
  return out;
}

std::string serialize_operator(const SLinearOperator& L) {
  if (L.src_basis()->order() != L.dst_basis()->order()) {
    throw InputError("serialize_operator: source and destination orders differ");
  }
  std::string out = "{\"kind\":\"s_linear_operator\",\"src_dim\":";
  out += std::to_string(L.src_basis()->dim());
  out += ",\"dst_dim\":";
  out += std::to_string(L.dst_basis()->dim());
  out += ",\"order\":";
  out += std::to_string(L.src_basis()->order());
  out += ",\"b_matrix\":";
  append_complex_rows(out, L.b_matrix(), L.rows(), L.cols());
  out += '}';
  return out;
}

std::string serialize_report(const VerificationReport& report) {
  std::string out = "{\"config\":{\"dim\":";
  out += std::to_string(report.config.dim);
  out += ",\"order\":";
  out += std::to_string(report.config.order);
  out += ",\"quad_order\":";
  out += std::to_string(report.config.quad_order);
  out += ",\"tol\":";
  append_double(out, report.config.tol);
  out += ",\"tail_fraction\":";
  append_double(out, report.config.tail_fraction);
  out += "},\"results\":[";
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    const CheckResult& r = report.results[i];
    if (i) out += ',';
    out += "{\"name\":";
    append_string(out, r.name);
    out += ",\"paper_anchor\":";
    append_string(out, r.paper_anchor);
    out += ",\"max_abs_error\":";
    append_double(out, r.max_abs_error);
    out += ",\"tolerance\":";
    append_double(out, r.tolerance);
    out += ",\"passed\":";
    out += r.passed ? "true" : "false";
    out += ",\"trials\":";
    out += std::to_string(r.trials);
    out += ",\"seed\":";
    out += std::to_string(r.seed);
    out += '}';
  }
  out += "],\"overall\":";
  out += report.overall ? "true" : "false";
  out += '}';
  return out;
}

std::string serialize_report_csv(const VerificationReport& report) {
  std::string out;
  for (const CheckResult& r : report.results) {
    out += r.name;
    out += ",\"";
    out += r.paper_anchor;  // anchors contain commas, never quotes
    out += "\",";
    append_double(out, r.max_abs_error);
    out += ',';
    append_double(out, r.tolerance);
    out += ',';
    out += r.passed ? '1' : '0';
    out += '\n';
  }
  return out;
}

TestFunction parse_test_function(const std::string& text) {
  const char* where = "parse_test_function";
  json j = parse_text(text, where);
  require_kind(j, "test_function", where);
  BasisPtr basis = basis_from(int_field(j, "dim", where),
                              int_field(j, "order", where));
  if (!j.contains("coeffs")) throw InputError("parse_test_function: no coeffs");
  return TestFunction(basis, complex_list(j["coeffs"], basis->size(), where));
}

TemperedDistribution parse_distribution(const std::string& text) {
  const char* where = "parse_distribution";
  json j = parse_text(text, where);
  require_kind(j, "distribution", where);
  BasisPtr basis = basis_from(int_field(j, "dim", where),
                              int_field(j, "order", where));
  if (!j.contains("coeffs")) throw InputError("parse_distribution: no coeffs");
  return TemperedDistribution(basis,
                              complex_list(j["coeffs"], basis->size(), where));
}

SFamily parse_family(const std::string& text) {
  const char* where = "parse_family";
  json j = parse_text(text, where);
  require_kind(j, "s_family", where);
  const int order = int_field(j, "order", where);
  BasisPtr index = basis_from(int_field(j, "index_dim", where), order);
  BasisPtr value = basis_from(int_field(j, "value_dim", where), order);
  if (!j.contains("matrix")) throw InputError("parse_family: no matrix");
  return SFamily(index, value,
                 complex_rows(j["matrix"], index->size(), value->size(), where));
}

SLinearOperator parse_operator(const std::string& text) {
  const char* where = "parse_operator";
  json j = parse_text(text, where);
  require_kind(j, "s_linear_operator", where);
  const int order = int_field(j, "order", where);
  BasisPtr src = basis_from(int_field(j, "src_dim", where), order);
  BasisPtr dst = basis_from(int_field(j, "dst_dim", where), order);
  if (!j.contains("b_matrix")) throw InputError("parse_operator: no b_matrix");
  return SLinearOperator(
      src, dst, complex_rows(j["b_matrix"], src->size(), dst->size(), where));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("read_file: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("write_file: cannot open " + path);
  out << content;
  if (!out) throw InputError("write_file: write failed for " + path);
}

}  // namespace slin
