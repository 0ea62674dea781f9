#pragma once

#include <stdexcept>
#include <string>

namespace compositions {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Constraint parameters outside their domain (r = 0, r > m, p > q, ...).
struct InvalidConstraintError : Error {
  using Error::Error;
};

// gcd(r, m) != 1 where a coprime pair is required.
struct NotCoprimeError : InvalidConstraintError {
  using InvalidConstraintError::InvalidConstraintError;
};

// Enumeration would yield more items than the budget allows.
struct BudgetExceededError : Error {
  using Error::Error;
};

// Index argument outside the supported window (n = 0, n above the ceiling,
// Binet above its double-precision range).
struct OutOfRangeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line_number)
      : Error(what), line(line_number) {}
  std::size_t line;
};

struct NetworkError : Error {
  using Error::Error;
};

struct CacheMissOfflineError : Error {
  using Error::Error;
};

// Cross-check interval not covered by the b-file.
struct RangeUncoveredError : Error {
  using Error::Error;
};

// More than one shift aligns (constant sequences and the like).
struct AmbiguousAlignmentError : Error {
  using Error::Error;
};

// Rational generating function whose denominator has constant term != 1.
struct BadDenominatorError : Error {
  using Error::Error;
};

}  // namespace compositions
