#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace texlab {

// Bad user input: config keys, file contents, out-of-range parameters.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure: non-convergence, invalid domain, degenerate objective.
class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

// Matsubara sum hit the term cap before meeting the convergence rule.
class MatsubaraError : public NumericsError {
 public:
  MatsubaraError(const std::string& msg, double partial)
      : NumericsError(msg), partial_sum(partial) {}
  double partial_sum;
};

// Joint fit parameters cannot be separated by the objective.
class DegeneracyError : public NumericsError {
 public:
  DegeneracyError(const std::string& msg, std::string p1, std::string p2)
      : NumericsError(msg), param_a(std::move(p1)), param_b(std::move(p2)) {}
  std::string param_a, param_b;
};

// Sensitivity map lambda_HV -> cf-peak height is not invertible.
class MapInversionError : public NumericsError {
 public:
  MapInversionError(const std::string& msg, std::vector<std::pair<double, double>> m)
      : NumericsError(msg), map(std::move(m)) {}
  std::vector<std::pair<double, double>> map;
};

// A scan found no transition inside the searched range.
class NotFoundError : public std::runtime_error {
 public:
  NotFoundError(const std::string& msg, double lo, double hi)
      : std::runtime_error(msg), range_lo(lo), range_hi(hi) {}
  double range_lo, range_hi;
};

}  // namespace texlab
