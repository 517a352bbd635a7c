#include "cumulants/scalar.hpp"

#include <ostream>

#include "cumulants/error.hpp"

namespace cumulants {

namespace {

Polynomial promote(const Rational& r, const std::string& symbol) {
  return Polynomial::constant(symbol, r);
}

}  // namespace

std::optional<std::string> Scalar::symbol_name() const {
  if (is_polynomial()) return polynomial().symbol();
  return std::nullopt;
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

Scalar Scalar::div_int(const BigInt& k) const {
  if (k <= 0) throw DomainError("scalar division requires a positive integer divisor");
  const Rational inverse(BigInt(1), k);
  if (is_rational()) return Scalar(rational() * inverse);
  return Scalar(polynomial() * inverse);
}

Scalar Scalar::pow(unsigned exponent) const {
  if (is_rational()) return Scalar(rational().pow(exponent));
  return Scalar(polynomial().pow(exponent));
}

Rational Scalar::evaluate(const Rational& at) const {
  if (is_rational()) return rational();
  return polynomial().evaluate(at);
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, value_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (is_rational() && rhs.is_rational()) {
    std::get<Rational>(value_) += rhs.rational();
  } else if (is_polynomial() && rhs.is_polynomial()) {
    std::get<Polynomial>(value_) += rhs.polynomial();
  } else if (is_polynomial()) {
    std::get<Polynomial>(value_) += promote(rhs.rational(), polynomial().symbol());
  } else {
    value_ = promote(rational(), rhs.polynomial().symbol()) + rhs.polynomial();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_rational() && rhs.is_rational()) {
    std::get<Rational>(value_) *= rhs.rational();
  } else if (is_polynomial() && rhs.is_polynomial()) {
    std::get<Polynomial>(value_) *= rhs.polynomial();
  } else if (is_polynomial()) {
    std::get<Polynomial>(value_) *= rhs.rational();
  } else {
    value_ = rational() * rhs.polynomial();
  }
  return *this;
}

Scalar operator-(const Scalar& a) {
  if (a.is_rational()) return Scalar(-a.rational());
  return Scalar(-a.polynomial());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  if (a.is_polynomial() && b.is_polynomial()) return a.polynomial() == b.polynomial();
  const Polynomial& p = a.is_polynomial() ? a.polynomial() : b.polynomial();
  const Rational& r = a.is_rational() ? a.rational() : b.rational();
  return p.is_constant() && p.coeff(0) == r;
}

Scalar scalar_add(const Scalar& x, const Scalar& y) { return x + y; }
Scalar scalar_mul(const Scalar& x, const Scalar& y) { return x * y; }
Scalar scalar_neg(const Scalar& x) { return -x; }
Scalar scalar_div_int(const Scalar& x, const BigInt& k) { return x.div_int(k); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace cumulants
