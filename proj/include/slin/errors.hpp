#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slin {

//! Invalid resolution parameters, mismatched bases, bad CLI usage.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Non-finite or otherwise malformed numerical input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! A sampled family column keeps too much energy above the resolvable band.
struct NotSchwartzAtResolution : std::runtime_error {
  std::size_t column;
  double residual;
  NotSchwartzAtResolution(const std::string& msg, std::size_t col, double res)
      : std::runtime_error(msg), column(col), residual(res) {}
};

//! A family matrix is numerically singular or too ill-conditioned to invert.
struct IllConditionedBasis : std::runtime_error {
  double condition;
  IllConditionedBasis(const std::string& msg, double cond)
      : std::runtime_error(msg), condition(cond) {}
};

}  // namespace slin
