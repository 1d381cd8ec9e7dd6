#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cdt {

// Exact rational scalar. Values are always kept in canonical form: lowest
// terms with a positive denominator, so structural equality coincides with
// mathematical equality and serialization is unique.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design for literals
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  // Parses "p" or "p/q" with optional leading '-'. Rejects anything else.
  static Rational parse(std::string_view text);

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational inverse() const;  // throws CdError(kDivisionByZero) on zero

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  // "p/q" when the denominator is not 1, otherwise "p".
  std::string str() const;

  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cdt
