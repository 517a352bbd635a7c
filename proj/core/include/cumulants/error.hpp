#pragma once

#include <stdexcept>
#include <string>

namespace cumulants {

/// Two polynomial operands carry different indeterminates.
class SymbolMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cumulant sequence was handed to a conversion expecting another kind.
class KindMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input sequence is shorter than the requested order.
class SequenceTooShort : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Argument outside the mathematical domain of an operation (k = 0, c_0 != 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cumulants
