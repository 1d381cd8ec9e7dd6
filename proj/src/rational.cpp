#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "errors.hpp"

namespace cdt {

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw CdError(Errc::kDivisionByZero, "rational with zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_digits(den)) {
      throw CdError(Errc::kParse, "invalid rational literal: " + std::string(text));
    }
  }
  if (!num.empty() && num.front() == '-') num.remove_prefix(1);
  if (!is_digits(num)) {
    throw CdError(Errc::kParse, "invalid rational literal: " + std::string(text));
  }
  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0) {
    throw CdError(Errc::kParse, "invalid rational literal: " + std::string(text));
  }
  if (v.get_den() == 0) {
    throw CdError(Errc::kDivisionByZero, "rational with zero denominator: " + std::string(text));
  }
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator-() const {
  mpq_class r = -v_;
  return Rational(std::move(r));
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw CdError(Errc::kDivisionByZero, "inverse of zero");
  }
  mpq_class r = 1 / v_;
  return Rational(std::move(r));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw CdError(Errc::kDivisionByZero, "division by zero");
  }
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cdt
