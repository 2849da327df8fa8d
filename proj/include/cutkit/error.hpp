#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cutkit {

enum class ErrorCode {
  invalid_input = 1,
  parse = 2,
  infeasible = 3,
  budget = 4,
  numeric = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(ErrorCode::invalid_input, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(ErrorCode::parse, line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class Infeasible : public Error {
 public:
  explicit Infeasible(const std::string& what) : Error(ErrorCode::infeasible, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(ErrorCode::budget, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(ErrorCode::numeric, what) {}
};

/// Thrown when row generation hits its cap; carries the last LP iterate.
class LpIterationLimit : public NumericalError {
 public:
  LpIterationLimit(const std::string& what, std::vector<double> last)
      : NumericalError(what), last_iterate(std::move(last)) {}
  std::vector<double> last_iterate;
};

}  // namespace cutkit
