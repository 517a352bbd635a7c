#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "cumulants/polynomial.hpp"
#include "cumulants/rational.hpp"

namespace cumulants {

/// Value domain of every sequence: an exact rational or a univariate
/// polynomial over the rationals. A Rational is promoted to a constant
/// Polynomial only when combined with a Polynomial; two Polynomials must
/// share their symbol.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Polynomial value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long value) : value_(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : value_(Rational(value)) {}   // NOLINT(google-explicit-constructor)
  Scalar(const BigInt& value) : value_(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  /// The indeterminate "symbol" as a degree-one polynomial.
  static Scalar symbol(std::string name) { return Polynomial::variable(std::move(name)); }

  [[nodiscard]] bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  [[nodiscard]] bool is_polynomial() const { return std::holds_alternative<Polynomial>(value_); }
  [[nodiscard]] const Rational& rational() const { return std::get<Rational>(value_); }
  [[nodiscard]] const Polynomial& polynomial() const { return std::get<Polynomial>(value_); }
  /// Symbol name when polynomial.
  [[nodiscard]] std::optional<std::string> symbol_name() const;

  [[nodiscard]] bool is_zero() const;

  /// Exact division by a positive integer; throws DomainError for k = 0.
  [[nodiscard]] Scalar div_int(const BigInt& k) const;
  [[nodiscard]] Scalar pow(unsigned exponent) const;
  /// Substitutes a rational for the indeterminate (identity on rationals).
  [[nodiscard]] Rational evaluate(const Rational& at) const;

  [[nodiscard]] std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator-(const Scalar& a);

  /// Value equality; a Rational equals the constant Polynomial with the same value.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, Polynomial> value_;
};

Scalar scalar_add(const Scalar& x, const Scalar& y);
Scalar scalar_mul(const Scalar& x, const Scalar& y);
Scalar scalar_neg(const Scalar& x);
Scalar scalar_div_int(const Scalar& x, const BigInt& k);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cumulants
