#pragma once

#include <string>

#include "slin/verify.hpp"

namespace slin {

// Canonical writers: fixed key order, compact separators, %.17g doubles, so
// equal objects serialize to identical bytes.
std::string serialize_test_function(const TestFunction& phi);
std::string serialize_distribution(const TemperedDistribution& u);
std::string serialize_family(const SFamily& v);
std::string serialize_operator(const SLinearOperator& L);
std::string serialize_report(const VerificationReport& report);
std::string serialize_report_csv(const VerificationReport& report);

// Parsers accept anything the writers emit. The basis is rebuilt from dim and
// order with quad_order = max(80, 2 * order + 2) and default tolerances.
TestFunction parse_test_function(const std::string& text);
TemperedDistribution parse_distribution(const std::string& text);
SFamily parse_family(const std::string& text);
SLinearOperator parse_operator(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace slin
