#include "cumulants/polynomial.hpp"

#include <ostream>

#include "cumulants/error.hpp"

namespace cumulants {

Polynomial::Polynomial(std::string symbol, std::vector<Rational> coeffs)
    : symbol_(std::move(symbol)), coeffs_(std::move(coeffs)) {
  if (symbol_.empty()) throw DomainError("polynomial symbol must be non-empty");
  normalize();
}

Polynomial Polynomial::variable(std::string symbol) {
  return Polynomial(std::move(symbol), {Rational(0), Rational(1)});
}

Polynomial Polynomial::constant(std::string symbol, Rational value) {
  return Polynomial(std::move(symbol), {std::move(value)});
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::require_same_symbol(const Polynomial& other) const {
  if (symbol_ != other.symbol_) {
    throw SymbolMismatch("polynomials in different symbols: '" + symbol_ + "' and '" +
                         other.symbol_ + "'");
  }
}

Rational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(symbol_, Rational(1));
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Rational magnitude = negative ? -c : c;
    if (k == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) {
      out += magnitude.to_string();
      out += '*';
    }
    out += symbol_;
    if (k > 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_symbol(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_symbol(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_symbol(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.symbol_);
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.symbol_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  normalize();
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace cumulants
