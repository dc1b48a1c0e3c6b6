#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ord {

/// Reasons a value can fail validation or an operation can be misapplied.
enum class ErrorKind {
  EmptyExpBase,    // Exp node whose base denotes the empty ordinal
  EmptyOrdinal,    // asked for an element of the empty ordinal
  ShapeMismatch,   // element shape does not match the expression
  OutOfRange,      // value outside the ordinal's bounds
  NotDecreasing,   // exponent components of a list not strictly decreasing
  NotPositive,     // base component equal to the least element
  Underflow,       // left subtraction with minuend above the target
  DivisionByZero,
  ZeroBase,        // exponentiation with base 0
  NotLeq,          // simulation/subtraction requested against the order
  ParseError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::EmptyExpBase: return "EmptyExpBase";
    case ErrorKind::EmptyOrdinal: return "EmptyOrdinal";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotDecreasing: return "NotDecreasing";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::Underflow: return "Underflow";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroBase: return "ZeroBase";
    case ErrorKind::NotLeq: return "NotLeq";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Validation outcome carrying the failure position: `path` walks the
/// expression tree (for validate_expr), `index` is the offending list entry
/// (for the list checks of validate_element).
struct Invalid {
  ErrorKind kind;
  std::string path;
  std::size_t index = 0;
  std::string message;
};

/// nullopt means the value validated cleanly.
using ValidationResult = std::optional<Invalid>;

[[noreturn]] inline void raise(const Invalid& inv) {
  throw Error(inv.kind, inv.message.empty() ? inv.path : inv.message);
}

}  // namespace ord
