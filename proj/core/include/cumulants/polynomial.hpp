#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cumulants/rational.hpp"

namespace cumulants {

/// Dense univariate polynomial with rational coefficients in a named
/// indeterminate. coeffs()[k] is the coefficient of symbol^k; the leading
/// coefficient is never zero and the zero polynomial has no coefficients.
class Polynomial {
 public:
  explicit Polynomial(std::string symbol, std::vector<Rational> coeffs = {});

  static Polynomial variable(std::string symbol);
  static Polynomial constant(std::string symbol, Rational value);

  [[nodiscard]] const std::string& symbol() const { return symbol_; }
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of symbol^k (zero beyond the degree).
  [[nodiscard]] Rational coeff(std::size_t k) const;
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }

  [[nodiscard]] Rational evaluate(const Rational& at) const;
  [[nodiscard]] Polynomial pow(unsigned exponent) const;

  /// Descending-degree ASCII rendering, e.g. "lambda^2+lambda" or "1/2*p^3-p".
  [[nodiscard]] std::string to_string() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
  friend Polynomial operator*(const Rational& a, Polynomial b) { return b *= a; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void normalize();
  void require_same_symbol(const Polynomial& other) const;

  std::string symbol_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace cumulants
