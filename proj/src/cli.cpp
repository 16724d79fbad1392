#include "slin/cli.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

#include "slin/io.hpp"

namespace slin {

namespace {

const char* kUsage =
    "usage: slinops <command> [options]\n"
    "\n"
    "commands:\n"
    "  verify                      run the full identity suite\n"
    "  expand <dist>               print the dual coefficients of a distribution\n"
    "  deriv <dist> [k]            k-fold distributional derivative along axis 0\n"
    "  family-eval <family> <fn> <point>\n"
    "                              pair a family member against a test function\n"
    "                              both ways and compare\n"
    "\n"
    "options:\n"
    "  --dim D          space dimension (default 1)\n"
    "  --order N        highest Hermite degree per axis (default 32)\n"
    "  --quad Q         Gauss-Hermite points per axis (default 80)\n"
    "  --tol T          comparison tolerance (default 1e-10)\n"
    "  --seed S         random seed for verify (default 0)\n"
    "  --format F       json or csv (default json)\n"
    "  --out PATH       write output to PATH instead of stdout\n"
    "\n"
    "distributions: dirac@<x,..>, hermite@<a,..>, gaussian, constant, or a\n"
    "JSON file path. test functions: same minus dirac. families: dirac,\n"
    "dirac-deriv@<a,..>.\n";

struct CliOptions {
  BasisConfig config;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::vector<std::string> positional;
};

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("slinops: bad integer for ") + what + ": " + s);
  }
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("slinops: bad number for ") + what + ": " + s);
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<double> parse_point(const std::string& s, int dim) {
  std::vector<double> p;
  for (const std::string& part : split_commas(s)) {
    p.push_back(parse_double(part, "coordinate"));
  }
  if (int(p.size()) != dim) {
    throw ConfigError("slinops: expected " + std::to_string(dim) +
                      " coordinates, got " + std::to_string(p.size()));
  }
  return p;
}

std::vector<int> parse_multi(const std::string& s, const Basis& basis) {
  std::vector<int> a;
  for (const std::string& part : split_commas(s)) {
    a.push_back(parse_int(part, "index"));
  }
  if (int(a.size()) != basis.dim()) {
    throw ConfigError("slinops: expected " + std::to_string(basis.dim()) +
                      " index components, got " + std::to_string(a.size()));
  }
  for (int v : a) {
    if (v < 0 || v > basis.order()) {
      throw ConfigError("slinops: index component " + std::to_string(v) +
                        " outside 0.." + std::to_string(basis.order()));
    }
  }
  return a;
}

CliOptions parse_options(const std::vector<std::string>& args) {
  CliOptions o;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const auto value = [&]() -> const std::string& {
      if (i + 1 >= args.size()) {
        throw ConfigError("slinops: " + a + " needs a value");
      }
      return args[++i];
    };
    if (a == "--dim") {
      o.config.dim = parse_int(value(), "--dim");
    } else if (a == "--order") {
      o.config.order = parse_int(value(), "--order");
    } else if (a == "--quad") {
      o.config.quad_order = parse_int(value(), "--quad");
    } else if (a == "--tol") {
      o.config.tol = parse_double(value(), "--tol");
    } else if (a == "--seed") {
      o.seed = std::uint64_t(parse_int(value(), "--seed"));
    } else if (a == "--format") {
      o.format = value();
      if (o.format != "json" && o.format != "csv") {
        throw ConfigError("slinops: --format must be json or csv");
      }
    } else if (a == "--out") {
      o.out = value();
    } else if (a.rfind("--", 0) == 0) {
      throw ConfigError("slinops: unknown option " + a);
    } else {
      o.positional.push_back(a);
    }
  }
  // keep the quadrature invariant when only --order was raised
  o.config.quad_order = std::max(o.config.quad_order, 2 * o.config.order + 2);
  return o;
}

void emit(const CliOptions& o, std::ostream& out, const std::string& payload) {
  if (o.out.empty()) {
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << '\n';
  } else {
    write_file(o.out, payload);
  }
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::optional<TemperedDistribution> builtin_distribution(
    const BasisPtr& basis, const std::string& id) {
  if (id.rfind("dirac@", 0) == 0) {
    return dirac_at(basis, parse_point(id.substr(6), basis->dim()));
  }
  if (id.rfind("hermite@", 0) == 0) {
    const std::vector<int> a = parse_multi(id.substr(8), *basis);
    const TestFunction h = basis_function(basis, basis->flat_index(a));
    return TemperedDistribution(basis, h.coeffs());
  }
  if (id == "gaussian") {
    return embed_function(basis, [](std::span<const double> x) {
      double s = 0.0;
      for (double c : x) s += c * c;
      return Complex(std::exp(-s), 0.0);
    });
  }
  if (id == "constant") {
    return embed_function(basis,
                          [](std::span<const double>) { return Complex(1.0, 0.0); });
  }
  return std::nullopt;
}

std::string basis_desc(const Basis& b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "dim %d, order %d, quad %d, tol %g, tail %g",
                b.dim(), b.order(), b.quad_order(), b.config().tol,
                b.config().tail_fraction);
  return buf;
}

//! Files rebuild their basis from dim and order alone, so the message spells
//! out both sides instead of the bare mismatch the library guard reports.
void require_file_config(const BasisPtr& loaded, const BasisPtr& wanted) {
  if (loaded->config() == wanted->config()) return;
  throw ConfigError("slinops: file basis (" + basis_desc(*loaded) +
                    ") does not match options (" + basis_desc(*wanted) +
                    "); pass the file's --dim and --order and leave --quad and"
                    " --tol at their defaults");
}

TemperedDistribution load_distribution(const BasisPtr& basis,
                                       const std::string& id) {
  if (auto u = builtin_distribution(basis, id)) return *u;
  TemperedDistribution u = parse_distribution(read_file(id));
  require_file_config(u.basis(), basis);
  return u;
}

TestFunction load_test_function(const BasisPtr& basis, const std::string& id) {
  if (id.rfind("dirac@", 0) == 0) {
    throw ConfigError("slinops: dirac is not a test function");
  }
  if (id.rfind("hermite@", 0) == 0) {
    return basis_function(basis, basis->flat_index(parse_multi(id.substr(8), *basis)));
  }
  if (id == "gaussian" || id == "constant") {
    const TemperedDistribution u = *builtin_distribution(basis, id);
    return TestFunction(basis, u.duals());
  }
  TestFunction phi = parse_test_function(read_file(id));
  require_file_config(phi.basis(), basis);
  return phi;
}

SFamily load_family(const BasisPtr& basis, const std::string& id) {
  if (id == "dirac") return dirac_family(basis);
  if (id.rfind("dirac-deriv@", 0) == 0) {
    return dirac_derivative_family(basis, parse_multi(id.substr(12), *basis));
  }
  SFamily v = parse_family(read_file(id));
  require_file_config(v.index_basis(), basis);
  require_file_config(v.value_basis(), basis);
  return v;
}

std::string distribution_csv(const TemperedDistribution& u) {
  const Basis& basis = *u.basis();
  std::string out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (int c : basis.multi_index(i)) {
      out += std::to_string(c);
      out += ',';
    }
    out += fmt17(u.duals()[i].real());
    out += ',';
    out += fmt17(u.duals()[i].imag());
    out += '\n';
  }
  return out;
}

int cmd_verify(const CliOptions& o, std::ostream& out) {
  const VerificationReport report = run_suite(o.config, o.seed);
  emit(o, out,
       o.format == "csv" ? serialize_report_csv(report)
                         : serialize_report(report));
  return report.overall ? 0 : 1;
}

int cmd_expand(const CliOptions& o, std::ostream& out) {
  if (o.positional.size() != 2) {
    throw ConfigError("slinops: expand takes one distribution argument");
  }
  const BasisPtr basis = make_basis(o.config);
  const TemperedDistribution u = load_distribution(basis, o.positional[1]);
  emit(o, out,
       o.format == "csv" ? distribution_csv(u) : serialize_distribution(u));
  return 0;
}

int cmd_deriv(const CliOptions& o, std::ostream& out, std::ostream& err) {
  if (o.positional.size() != 2 && o.positional.size() != 3) {
    throw ConfigError("slinops: deriv takes a distribution and an optional order");
  }
  const int k = o.positional.size() == 3 ? parse_int(o.positional[2], "k") : 1;
  if (k < 0) throw ConfigError("slinops: derivative order must be >= 0");
  const BasisPtr basis = make_basis(o.config);
  const TemperedDistribution u = load_distribution(basis, o.positional[1]);

  std::vector<int> multi(std::size_t(basis->dim()), 0);
  multi[0] = k;
  const TemperedDistribution via_family =
      superpose(u, dirac_derivative_family(basis, multi));

  TemperedDistribution via_operator = u;
  const SLinearOperator d = derivative_operator(basis, 0);
  for (int j = 0; j < k; ++j) via_operator = apply(d, via_operator);

  double diff = 0.0;
  for (std::size_t i = 0; i < basis->size(); ++i) {
    diff = std::max(diff,
                    std::abs(via_family.duals()[i] - via_operator.duals()[i]));
  }
  err << "deriv: cross-check max |difference| = " << fmt17(diff) << "\n";

  emit(o, out,
       o.format == "csv" ? distribution_csv(via_family)
                         : serialize_distribution(via_family));
  return diff <= o.config.tol ? 0 : 1;
}

int cmd_family_eval(const CliOptions& o, std::ostream& out) {
  if (o.positional.size() != 4) {
    throw ConfigError(
        "slinops: family-eval takes a family, a test function, and a point");
  }
  const BasisPtr basis = make_basis(o.config);
  const SFamily v = load_family(basis, o.positional[1]);
  const TestFunction phi = load_test_function(basis, o.positional[2]);
  const std::vector<double> p = parse_point(o.positional[3], basis->dim());

  const Complex member_pairing = pair(member(v, p), phi);
  const Complex applied_value = eval(family_apply(v, phi), p);
  const double diff = std::abs(member_pairing - applied_value);

  std::string payload;
  if (o.format == "csv") {
    payload = fmt17(member_pairing.real()) + "," + fmt17(member_pairing.imag()) +
              "," + fmt17(applied_value.real()) + "," +
              fmt17(applied_value.imag()) + "," + fmt17(diff) + "\n";
  } else {
    payload = "{\"kind\":\"family_eval\",\"member_pairing\":[" +
              fmt17(member_pairing.real()) + "," + fmt17(member_pairing.imag()) +
              "],\"applied_value\":[" + fmt17(applied_value.real()) + "," +
              fmt17(applied_value.imag()) + "],\"max_abs_difference\":" +
              fmt17(diff) + "}";
  }
  emit(o, out, payload);
  return diff <= o.config.tol ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    if (args.empty() || args[0] == "help" || args[0] == "--help" ||
        args[0] == "-h") {
      (args.empty() ? err : out) << kUsage;
      return args.empty() ? 2 : 0;
    }
    const CliOptions o = parse_options(args);
    const std::string& cmd = o.positional.empty() ? args[0] : o.positional[0];
    if (cmd == "verify") return cmd_verify(o, out);
    if (cmd == "expand") return cmd_expand(o, out);
    if (cmd == "deriv") return cmd_deriv(o, out, err);
    if (cmd == "family-eval") return cmd_family_eval(o, out);
    err << "slinops: unknown command " << cmd << "\n" << kUsage;
    return 2;
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "slinops: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace slin
