#include "algebra.hpp"

#include <algorithm>
#include <sstream>

namespace cdt {

std::string_view orientation_name(Orientation o) {
  return o == Orientation::kDefault ? "default" : "eq1-verbatim";
}

Orientation parse_orientation(std::string_view name) {
  if (name == "default") return Orientation::kDefault;
  if (name == "eq1-verbatim") return Orientation::kEq1Verbatim;
  throw CdError(Errc::kInvalidArgument, "unknown orientation: " + std::string(name));
}

Signature::Signature(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.size() > 62) {  // keeps dim() = 1 << level well defined
    throw CdError(Errc::kLevelBound, "tower level " + std::to_string(signs_.size()) +
                                         " exceeds the representable bound 62");
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw CdError(Errc::kInvalidArgument, "signature entries must be +1 or -1");
    }
  }
}

Signature Signature::division(int level) {
  if (level < 0) throw CdError(Errc::kInvalidArgument, "negative level");
  return Signature(std::vector<int>(static_cast<std::size_t>(level), -1));
}

Signature Signature::split_octonion() { return Signature({-1, -1, 1}); }

Signature Signature::parse(std::string_view pattern) {
  std::vector<int> signs;
  signs.reserve(pattern.size());
  for (char c : pattern) {
    if (c == '-') {
      signs.push_back(-1);
    } else if (c == '+') {
      signs.push_back(1);
    } else {
      throw CdError(Errc::kInvalidArgument,
                    "sign pattern must consist of '+' and '-' characters: " + std::string(pattern));
    }
  }
  return Signature(std::move(signs));
}

int Signature::top_sign() const {
  if (signs_.empty()) throw CdError(Errc::kStructure, "level-0 signature has no doubling sign");
  return signs_.back();
}

Signature Signature::parent() const {
  if (signs_.empty()) throw CdError(Errc::kStructure, "level-0 signature has no parent");
  return Signature(std::vector<int>(signs_.begin(), signs_.end() - 1));
}

Signature Signature::child(int gamma) const {
  std::vector<int> signs = signs_;
  signs.push_back(gamma);
  return Signature(std::move(signs));
}

std::string Signature::pattern() const {
  std::string out;
  out.reserve(signs_.size());
  for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

Element Element::zero(const Signature& sig) {
  return Element(sig, std::vector<Rational>(sig.dim(), Rational::zero()));
}

Element Element::one(const Signature& sig) { return basis(sig, 0); }

Element Element::basis(const Signature& sig, std::size_t k) {
  if (k >= sig.dim()) {
    throw CdError(Errc::kIndexRange, "basis index " + std::to_string(k) +
                                         " out of range for level " + std::to_string(sig.level()));
  }
  Element e = zero(sig);
  e.coeffs_[k] = Rational::one();
  return e;
}

Element Element::scalar(const Signature& sig, Rational value) {
  Element e = zero(sig);
  e.coeffs_[0] = std::move(value);
  return e;
}

Element Element::from_coeffs(Signature sig, std::vector<Rational> coeffs) {
  if (coeffs.size() != sig.dim()) {
    throw CdError(Errc::kInvalidArgument, "coefficient count does not match signature dimension");
  }
  return Element(std::move(sig), std::move(coeffs));
}

const Rational& Element::coeff(std::size_t k) const {
  if (k >= coeffs_.size()) {
    throw CdError(Errc::kIndexRange, "coefficient index out of range");
  }
  return coeffs_[k];
}

bool Element::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool Element::is_scalar() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

std::pair<Element, Element> Element::split() const {
  if (level() == 0) throw CdError(Errc::kStructure, "level-0 element does not split");
  Signature parent = sig_.parent();
  const std::size_t h = parent.dim();
  std::vector<Rational> lo(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(h));
  std::vector<Rational> hi(coeffs_.begin() + static_cast<std::ptrdiff_t>(h), coeffs_.end());
  return {Element(parent, std::move(lo)), Element(parent, std::move(hi))};
}

Element Element::join(const Element& lo, const Element& hi, int top_sign) {
  if (lo.signature() != hi.signature()) {
    throw CdError(Errc::kSignatureMismatch, "join halves live in different signatures");
  }
  Signature sig = lo.signature().child(top_sign);
  std::vector<Rational> coeffs;
  coeffs.reserve(sig.dim());
  coeffs.insert(coeffs.end(), lo.coeffs_.begin(), lo.coeffs_.end());
  coeffs.insert(coeffs.end(), hi.coeffs_.begin(), hi.coeffs_.end());
  return Element(std::move(sig), std::move(coeffs));
}

Element Element::conjugate() const {
  Element r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); ++i) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

Rational Element::norm(Orientation o) const {
  Element p = mul(*this, conjugate(), o);
  if (!p.is_scalar()) {
    throw CdError(Errc::kStructure, "x * conj(x) is not scalar");
  }
  return p.coeff(0);
}

Rational Element::norm_closed_form() const {
  if (level() == 0) return coeffs_[0] * coeffs_[0];
  auto [lo, hi] = split();
  Rational n = lo.norm_closed_form();
  Rational m = hi.norm_closed_form();
  return sig_.top_sign() > 0 ? n - m : n + m;
}

InverseResult Element::inverse(Orientation o) const {
  Rational n = norm(o);
  if (n.is_zero()) {
    throw CdError(Errc::kNotInvertible,
                  "norm is zero at level " + std::to_string(level()) + ", signs \"" +
                      sig_.pattern() + "\"");
  }
  Element value = n.inverse() * conjugate();
  Element id = one(sig_);
  return InverseResult{
      .value = value,
      .left_identity = mul(value, *this, o) == id,
      .right_identity = mul(*this, value, o) == id,
  };
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Element operator+(const Element& a, const Element& b) {
  if (a.sig_ != b.sig_) throw CdError(Errc::kSignatureMismatch, "adding across signatures");
  Element r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

Element operator-(const Element& a, const Element& b) {
  if (a.sig_ != b.sig_) throw CdError(Errc::kSignatureMismatch, "subtracting across signatures");
  Element r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
  return r;
}

Element operator*(const Rational& s, const Element& a) {
  Element r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

std::string Element::format() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (k == 0) {
      out << mag.str();
    } else if (mag.is_one()) {
      out << 'e' << k;
    } else {
      out << mag.str() << "*e" << k;
    }
  }
  if (first) return "0";
  return out.str();
}

Element mul(const Element& x, const Element& y, Orientation o) {
  if (x.signature() != y.signature()) {
    throw CdError(Errc::kSignatureMismatch, "multiplying across signatures");
  }
  std::vector<Rational> out = detail::cd_mul_vec<Rational>(
      std::span<const Rational>(x.coeffs()), std::span<const Rational>(y.coeffs()),
      std::span<const int>(x.signature().signs()), o == Orientation::kEq1Verbatim);
  return Element::from_coeffs(x.signature(), std::move(out));
}

std::vector<std::vector<TableEntry>> mul_table(const Signature& sig, Orientation o) {
  if (sig.level() > kMaxTableLevel) {
    throw CdError(Errc::kLevelBound, "table level " + std::to_string(sig.level()) +
                                         " exceeds bound " + std::to_string(kMaxTableLevel));
  }
  const std::size_t dim = sig.dim();
  std::vector<std::vector<TableEntry>> table(dim, std::vector<TableEntry>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    Element ej = Element::basis(sig, j);
    for (std::size_t k = 0; k < dim; ++k) {
      Element p = mul(ej, Element::basis(sig, k), o);
      TableEntry entry{0, 0};
      int nonzero = 0;
      for (std::size_t m = 0; m < dim; ++m) {
        const Rational& c = p.coeff(m);
        if (c.is_zero()) continue;
        ++nonzero;
        if (c.is_one()) {
          entry = TableEntry{1, m};
        } else if ((-c).is_one()) {
          entry = TableEntry{-1, m};
        } else {
          nonzero = 2;
        }
      }
      if (nonzero != 1) {
        throw CdError(Errc::kStructure, "basis product is not a signed basis element");
      }
      table[j][k] = entry;
    }
  }
  return table;
}

Element random_element(Rng& rng, const Signature& sig) {
  std::vector<Rational> coeffs;
  coeffs.reserve(sig.dim());
  for (std::size_t i = 0; i < sig.dim(); ++i) {
    coeffs.emplace_back(rng.int_in(-9, 9), rng.int_in(1, 9));
  }
  return Element::from_coeffs(sig, std::move(coeffs));
}

}  // namespace cdt
