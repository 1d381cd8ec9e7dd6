#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "random.hpp"
#include "rational.hpp"

namespace cdt {

// Which doubling formula drives every product.
//
// kDefault:      (q1,p1)(q2,p2) = (q1 q2 + g p2 p1*,  q2 p1 + q1* p2)
// kEq1Verbatim:  (q1,p1)(q2,p2) = (q1 q2 + g p2* p1,  q2 p1 + q1* p2)
//
// The two differ only in which factor of the low cross term is conjugated.
// They coincide up to level 1, where conjugation inside the halves is
// trivial; from level 2 on the tables differ (first at e2*e3), and the
// matrix module's mnemonic check separates them at level 3.
enum class Orientation { kDefault, kEq1Verbatim };

std::string_view orientation_name(Orientation o);
Orientation parse_orientation(std::string_view name);  // throws kInvalidArgument

// Sign data for a doubling tower: signs()[m] is the gamma used when passing
// from level m to level m+1. All entries are +1 or -1.
class Signature {
 public:
  Signature() = default;  // level 0 (the rationals themselves)
  explicit Signature(std::vector<int> signs);

  static Signature division(int level);       // all -1
  static Signature split_octonion();          // (-1, -1, +1)
  // pattern: one '-' or '+' per level, e.g. "--+". Must match `level` when
  // level >= 0 is supplied.
  static Signature parse(std::string_view pattern);

  int level() const { return static_cast<int>(signs_.size()); }
  std::size_t dim() const { return std::size_t{1} << signs_.size(); }
  const std::vector<int>& signs() const { return signs_; }
  int top_sign() const;        // gamma of the outermost doubling
  Signature parent() const;    // drop the outermost doubling
  Signature child(int gamma) const;

  std::string pattern() const;  // "--+" style; empty string at level 0

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> signs_;
};

struct InverseResult;

// One element of the tower algebra A_n: 2^n rational coordinates over the
// canonical basis e_0..e_{2^n-1}, where e_0 = 1 and e_{2^m + j} is the m-th
// adjoined unit times e_j.
class Element {
 public:
  Element() : Element(zero(Signature{})) {}

  static Element zero(const Signature& sig);
  static Element one(const Signature& sig);
  static Element basis(const Signature& sig, std::size_t k);  // throws kIndexRange
  static Element scalar(const Signature& sig, Rational value);
  static Element from_coeffs(Signature sig, std::vector<Rational> coeffs);

  const Signature& signature() const { return sig_; }
  int level() const { return sig_.level(); }
  std::size_t dim() const { return coeffs_.size(); }
  const Rational& coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_scalar() const;  // all coordinates above e_0 vanish

  // Pair decomposition at the outermost doubling: x = (lo, hi). Throws
  // kStructure at level 0.
  std::pair<Element, Element> split() const;
  static Element join(const Element& lo, const Element& hi, int top_sign);

  Element conjugate() const;

  // Coefficient of e_0 in x * conj(x); asserts the product is scalar.
  Rational norm(Orientation o = Orientation::kDefault) const;
  // Same value via the recursion N(q + lp) = N(q) - g N(p). Kept separate so
  // the two routes can be compared.
  Rational norm_closed_form() const;

  // conj(x)/N(x) with both identity checks recorded. Throws kNotInvertible
  // when N(x) = 0.
  InverseResult inverse(Orientation o = Orientation::kDefault) const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Rational& s, const Element& a);

  friend bool operator==(const Element&, const Element&) = default;

  // Short human form, e.g. "1/2 + e1 - 2*e4"; "0" for zero. Output is valid
  // input for the expression grammar.
  std::string format() const;

 private:
  Element(Signature sig, std::vector<Rational> coeffs)
      : sig_(std::move(sig)), coeffs_(std::move(coeffs)) {}

  Signature sig_;
  std::vector<Rational> coeffs_;
};

struct InverseResult {
  Element value;
  bool left_identity;   // value * x == 1
  bool right_identity;  // x * value == 1
};

// The only product in the library; everything else routes through it.
Element mul(const Element& x, const Element& y, Orientation o = Orientation::kDefault);

// Signed basis product e_j * e_k = sign * e_m.
struct TableEntry {
  int sign;
  std::size_t index;
};

inline constexpr int kMaxTableLevel = 6;

// Full basis table, outer index j, inner k. Computed through `mul`; asserts
// every product is exactly a signed basis element. Levels above
// kMaxTableLevel are rejected (kLevelBound).
std::vector<std::vector<TableEntry>> mul_table(const Signature& sig,
                                               Orientation o = Orientation::kDefault);

// Dense random element with small coefficients, deterministic in rng state.
Element random_element(Rng& rng, const Signature& sig);

namespace detail {

// Doubling product on raw coordinate vectors, generic over the scalar so the
// same kernel can run on floating-point coordinates. S needs +, -, *, unary
// minus and S(0).
template <class S>
std::vector<S> cd_mul_vec(std::span<const S> x, std::span<const S> y,
                          std::span<const int> signs, bool verbatim) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const int gamma = signs[signs.size() - 1];
  auto sub = signs.first(signs.size() - 1);

  std::span<const S> q1 = x.first(h), p1 = x.subspan(h);
  std::span<const S> q2 = y.first(h), p2 = y.subspan(h);

  auto conj = [](std::span<const S> v) {
    std::vector<S> r(v.begin(), v.end());
    for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
    return r;
  };

  std::vector<S> lo = cd_mul_vec<S>(q1, q2, sub, verbatim);
  std::vector<S> cross;
  if (verbatim) {
    std::vector<S> p2c = conj(p2);
    cross = cd_mul_vec<S>(p2c, p1, sub, verbatim);
  } else {
    std::vector<S> p1c = conj(p1);
    cross = cd_mul_vec<S>(p2, p1c, sub, verbatim);
  }
  for (std::size_t i = 0; i < h; ++i) {
    lo[i] = (gamma > 0) ? lo[i] + cross[i] : lo[i] - cross[i];
  }

  std::vector<S> hi = cd_mul_vec<S>(q2, p1, sub, verbatim);
  std::vector<S> q1c = conj(q1);
  std::vector<S> hi2 = cd_mul_vec<S>(q1c, p2, sub, verbatim);
  for (std::size_t i = 0; i < h; ++i) hi[i] = hi[i] + hi2[i];

  std::vector<S> out(n, S(0));
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = std::move(lo[i]);
    out[h + i] = std::move(hi[i]);
  }
  return out;
}

}  // namespace detail

}  // namespace cdt
