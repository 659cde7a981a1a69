#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cvxdual {

/// Raised when a symbolic computation exceeds its reduction budget.
class budget_exhausted : public std::runtime_error {
 public:
  explicit budget_exhausted(std::uint64_t budget)
      : std::runtime_error("budget exhausted: reduction step cap " +
                           std::to_string(budget) + " reached"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

/// Raised on invalid mathematical input (zero divisor, bad modulus, ...).
class math_error : public std::runtime_error {
 public:
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the problem-file parser; carries a line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace cvxdual
