#include "doctest.h"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "random.hpp"

using cdt::CdError;
using cdt::Element;
using cdt::Errc;
using cdt::mul;
using cdt::Orientation;
using cdt::Rational;
using cdt::Rng;
using cdt::Signature;
using cdt::TableEntry;

namespace {

// Independent basis-table oracle. Derived by hand from the doubling formula
// on pure basis pairs and kept deliberately simple: no Element arithmetic,
// only a sign recursion plus the xor index rule. The library must reproduce
// it entry for entry.
int conjsign(std::size_t j) { return j == 0 ? 1 : -1; }

int table_sign(int n, std::size_t j, std::size_t k, const std::vector<int>& signs, bool verbatim) {
  if (n == 0) return 1;
  const std::size_t h = std::size_t{1} << (n - 1);
  const int gamma = signs[static_cast<std::size_t>(n) - 1];
  const std::size_t jh = j / h, jl = j % h;
  const std::size_t kh = k / h, kl = k % h;
  if (jh == 0 && kh == 0) return table_sign(n - 1, jl, kl, signs, verbatim);
  if (jh == 0 && kh == 1) return conjsign(jl) * table_sign(n - 1, jl, kl, signs, verbatim);
  if (jh == 1 && kh == 0) return table_sign(n - 1, kl, jl, signs, verbatim);
  const int c = verbatim ? conjsign(kl) : conjsign(jl);
  return gamma * c * table_sign(n - 1, kl, jl, signs, verbatim);
}

TableEntry oracle_entry(const Signature& sig, std::size_t j, std::size_t k, Orientation o) {
  return TableEntry{
      table_sign(sig.level(), j, k, sig.signs(), o == Orientation::kEq1Verbatim),
      j ^ k,
  };
}

void check_table_against_oracle(const Signature& sig, Orientation o) {
  const std::string pat = sig.pattern();
  auto table = cdt::mul_table(sig, o);
  REQUIRE(table.size() == sig.dim());
  for (std::size_t j = 0; j < sig.dim(); ++j) {
    REQUIRE(table[j].size() == sig.dim());
    for (std::size_t k = 0; k < sig.dim(); ++k) {
      TableEntry want = oracle_entry(sig, j, k, o);
      CAPTURE(pat);
      CAPTURE(j);
      CAPTURE(k);
      CHECK(table[j][k].sign == want.sign);
      CHECK(table[j][k].index == want.index);
    }
  }
}

Element basis(const Signature& sig, std::size_t k) { return Element::basis(sig, k); }

}  // namespace

TEST_CASE("signature basics") {
  Signature q = Signature::division(2);
  CHECK(q.level() == 2);
  CHECK(q.dim() == 4);
  CHECK(q.pattern() == "--");
  CHECK(Signature::split_octonion().pattern() == "--+");
  CHECK(Signature::parse("--+") == Signature::split_octonion());
  CHECK(Signature::parse("").level() == 0);
  CHECK(q.parent().pattern() == "-");
  CHECK(q.child(1).pattern() == "--+");
  CHECK(q.top_sign() == -1);
  CHECK_THROWS_AS(Signature::parse("-x+"), CdError);
  CHECK_THROWS_AS(Signature{}.top_sign(), CdError);
  CHECK_THROWS_AS(Signature{}.parent(), CdError);
  CHECK_THROWS_AS(Signature::division(-1), CdError);
}

TEST_CASE("multiplication table matches the independent oracle") {
  for (int level = 0; level <= 3; ++level) {
    for (Orientation o : {Orientation::kDefault, Orientation::kEq1Verbatim}) {
      check_table_against_oracle(Signature::division(level), o);
    }
  }
  for (Orientation o : {Orientation::kDefault, Orientation::kEq1Verbatim}) {
    check_table_against_oracle(Signature::split_octonion(), o);
    check_table_against_oracle(Signature::parse("+"), o);
    check_table_against_oracle(Signature::parse("+-"), o);
    check_table_against_oracle(Signature::parse("-+-"), o);
    check_table_against_oracle(Signature::parse("+++"), o);
  }
  // Level 4 is the first level where the two orientations genuinely disagree
  // on a division pattern beyond single witnesses; sweep it fully once each.
  check_table_against_oracle(Signature::division(4), Orientation::kDefault);
  check_table_against_oracle(Signature::division(4), Orientation::kEq1Verbatim);
}

TEST_CASE("quaternion table frozen values") {
  Signature q = Signature::division(2);
  auto t = cdt::mul_table(q);
  auto entry = [&](std::size_t j, std::size_t k) { return t[j][k]; };

  CHECK(entry(1, 2).sign == -1);
  CHECK(entry(1, 2).index == 3);
  CHECK(entry(2, 1).sign == 1);
  CHECK(entry(2, 1).index == 3);
  CHECK(entry(1, 3).sign == 1);
  CHECK(entry(1, 3).index == 2);
  CHECK(entry(3, 1).sign == -1);
  CHECK(entry(3, 1).index == 2);
  CHECK(entry(2, 3).sign == -1);
  CHECK(entry(2, 3).index == 1);
  CHECK(entry(3, 2).sign == 1);
  CHECK(entry(3, 2).index == 1);
  for (std::size_t k = 1; k < 4; ++k) {
    CHECK(entry(k, k).sign == -1);
    CHECK(entry(k, k).index == 0);
    CHECK(entry(0, k).sign == 1);
    CHECK(entry(0, k).index == k);
    CHECK(entry(k, 0).sign == 1);
    CHECK(entry(k, 0).index == k);
  }
}

TEST_CASE("octonion landmarks") {
  Signature o3 = Signature::division(3);
  Element e1 = basis(o3, 1), e4 = basis(o3, 4), e5 = basis(o3, 5);

  CHECK(mul(e4, mul(e4, e1)) == -e1);
  CHECK(mul(e4, mul(e4, e1)) == mul(mul(e4, e4), e1));

  CHECK(mul(e4, e5) == -e1);
  CHECK(mul(e4, e5, Orientation::kEq1Verbatim) == e1);
}

TEST_CASE("orientations coincide up to level 1 and split at level 2") {
  for (const char* pat : {"", "-", "+"}) {
    Signature sig = Signature::parse(pat);
    Rng rng(21);
    for (int i = 0; i < 20; ++i) {
      Element x = cdt::random_element(rng, sig);
      Element y = cdt::random_element(rng, sig);
      CHECK(mul(x, y) == mul(x, y, Orientation::kEq1Verbatim));
    }
  }

  // First disagreement: the cross term conjugates p1 in one convention and
  // p2 in the other, which flips e2*e3.
  Signature q = Signature::division(2);
  Element e1 = basis(q, 1), e2 = basis(q, 2), e3 = basis(q, 3);
  CHECK(mul(e2, e3) == -e1);
  CHECK(mul(e2, e3, Orientation::kEq1Verbatim) == e1);
  CHECK(mul(e1, e2) == -e3);
  CHECK(mul(e1, e2, Orientation::kEq1Verbatim) == -e3);
}

TEST_CASE("ring axioms hold at every level") {
  for (const char* pat : {"-", "--", "--+", "----"}) {
    Signature sig = Signature::parse(pat);
    Rng rng(5);
    Element id = Element::one(sig);
    for (int i = 0; i < 15; ++i) {
      Element x = cdt::random_element(rng, sig);
      Element y = cdt::random_element(rng, sig);
      Element z = cdt::random_element(rng, sig);
      CHECK(x + y == y + x);
      CHECK((x + y) + z == x + (y + z));
      CHECK(mul(x, y + z) == mul(x, y) + mul(x, z));
      CHECK(mul(x + y, z) == mul(x, z) + mul(y, z));
      CHECK(mul(id, x) == x);
      CHECK(mul(x, id) == x);
      CHECK((x - x).is_zero());
      CHECK(Rational(2) * x == x + x);
    }
  }
}

TEST_CASE("conjugation is an anti-automorphism") {
  for (const char* pat : {"--", "--+", "---", "----"}) {
    Signature sig = Signature::parse(pat);
    Rng rng(9);
    for (Orientation o : {Orientation::kDefault, Orientation::kEq1Verbatim}) {
      for (int i = 0; i < 10; ++i) {
        Element x = cdt::random_element(rng, sig);
        Element y = cdt::random_element(rng, sig);
        CHECK(mul(x, y, o).conjugate() == mul(y.conjugate(), x.conjugate(), o));
        CHECK(x.conjugate().conjugate() == x);
        CHECK((x + x.conjugate()).is_scalar());
      }
    }
  }
}

TEST_CASE("norm via product equals the closed form") {
  for (const char* pat : {"", "-", "+", "--", "-+", "--+", "---", "----", "+-+-"}) {
    Signature sig = Signature::parse(pat);
    Rng rng(13);
    for (int i = 0; i < 10; ++i) {
      Element x = cdt::random_element(rng, sig);
      Rational n = x.norm();
      CHECK(n == x.norm_closed_form());
      CHECK(n == x.norm(Orientation::kEq1Verbatim));
      CHECK(mul(x, x.conjugate()) == Element::scalar(sig, n));
      CHECK(mul(x.conjugate(), x) == Element::scalar(sig, n));
    }
  }
}

TEST_CASE("norm values at the split signature") {
  Signature so = Signature::split_octonion();
  Element e0 = basis(so, 0), e4 = basis(so, 4);
  CHECK((e0 + e4).norm() == Rational(0));
  CHECK(basis(so, 1).norm() == Rational(1));
  CHECK(e4.norm() == Rational(-1));
  CHECK(mul(e0 + e4, e0 - e4).is_zero());
}

TEST_CASE("inverses are two-sided whenever the norm is nonzero") {
  for (const char* pat : {"-", "--", "--+", "---", "----", "+-"}) {
    Signature sig = Signature::parse(pat);
    Rng rng(17);
    for (Orientation o : {Orientation::kDefault, Orientation::kEq1Verbatim}) {
      for (int i = 0; i < 8; ++i) {
        Element x = cdt::random_element(rng, sig);
        if (x.norm(o).is_zero()) continue;
        auto inv = x.inverse(o);
        CHECK(inv.left_identity);
        CHECK(inv.right_identity);
        CHECK(mul(inv.value, x, o) == Element::one(sig));
      }
    }
  }

  Signature so = Signature::split_octonion();
  Element z = basis(so, 0) + basis(so, 4);
  CHECK_THROWS_AS(z.inverse(), CdError);
  try {
    z.inverse();
  } catch (const CdError& e) {
    CHECK(e.code() == Errc::kNotInvertible);
  }
  CHECK_THROWS_AS(Element::zero(so).inverse(), CdError);
}

TEST_CASE("split and join round-trip") {
  Signature so = Signature::split_octonion();
  Rng rng(23);
  Element x = cdt::random_element(rng, so);
  auto [lo, hi] = x.split();
  CHECK(lo.level() == 2);
  CHECK(Element::join(lo, hi, so.top_sign()) == x);
  CHECK_THROWS_AS(Element::scalar(Signature{}, Rational(3)).split(), CdError);
  Element mism = Element::one(Signature::division(1));
  CHECK_THROWS_AS(Element::join(lo, mism, -1), CdError);
}

TEST_CASE("element construction and errors") {
  Signature q = Signature::division(2);
  CHECK_THROWS_AS(Element::basis(q, 4), CdError);
  try {
    Element::basis(q, 4);
  } catch (const CdError& e) {
    CHECK(e.code() == Errc::kIndexRange);
  }
  CHECK_THROWS_AS(Element::from_coeffs(q, {Rational(1)}), CdError);
  Element x = Element::one(q);
  CHECK_THROWS_AS(x.coeff(9), CdError);
  Element other = Element::one(Signature::division(3));
  CHECK_THROWS_AS(x + other, CdError);
  CHECK_THROWS_AS(mul(x, other), CdError);
  try {
    mul(x, other);
  } catch (const CdError& e) {
    CHECK(e.code() == Errc::kSignatureMismatch);
  }
  CHECK(Element::scalar(q, Rational(1, 2)).is_scalar());
  CHECK_FALSE(basis(q, 2).is_scalar());
}

TEST_CASE("format is stable and readable") {
  Signature o3 = Signature::division(3);
  CHECK(Element::zero(o3).format() == "0");
  CHECK(Element::one(o3).format() == "1");
  CHECK((-basis(o3, 2)).format() == "-e2");
  CHECK(Element::scalar(o3, Rational(-3, 2)).format() == "-3/2");

  std::vector<Rational> coeffs(8, Rational(0));
  coeffs[0] = Rational(1, 2);
  coeffs[1] = Rational(1);
  coeffs[4] = Rational(-2, 3);
  CHECK(Element::from_coeffs(o3, coeffs).format() == "1/2 + e1 - 2/3*e4");

  coeffs.assign(8, Rational(0));
  coeffs[3] = Rational(-1);
  coeffs[5] = Rational(7);
  CHECK(Element::from_coeffs(o3, coeffs).format() == "-e3 + 7*e5");
}

TEST_CASE("table level bound") {
  CHECK_THROWS_AS(cdt::mul_table(Signature::division(7)), CdError);
  try {
    cdt::mul_table(Signature::division(7));
  } catch (const CdError& e) {
    CHECK(e.code() == Errc::kLevelBound);
  }
}

TEST_CASE("random elements are deterministic in the seed") {
  Signature so = Signature::split_octonion();
  Rng a(42), b(42), c(43);
  Element xa = cdt::random_element(a, so);
  Element xb = cdt::random_element(b, so);
  Element xc = cdt::random_element(c, so);
  CHECK(xa == xb);
  CHECK(xa != xc);
  for (const Rational& coef : xa.coeffs()) {
    CHECK(Rational(-10) < coef);
    CHECK(coef < Rational(10));
  }
}

TEST_CASE("doubling kernel runs on floating-point coordinates") {
  std::vector<double> x{1.0, 2.0}, y{3.0, 4.0};
  std::vector<int> signs{-1};
  auto out = cdt::detail::cd_mul_vec<double>(std::span<const double>(x),
                                             std::span<const double>(y),
                                             std::span<const int>(signs), false);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == doctest::Approx(-5.0));
  CHECK(out[1] == doctest::Approx(10.0));
}

TEST_CASE("orientation names round-trip") {
  CHECK(cdt::orientation_name(Orientation::kDefault) == "default");
  CHECK(cdt::orientation_name(Orientation::kEq1Verbatim) == "eq1-verbatim");
  CHECK(cdt::parse_orientation("default") == Orientation::kDefault);
  CHECK(cdt::parse_orientation("eq1-verbatim") == Orientation::kEq1Verbatim);
  CHECK_THROWS_AS(cdt::parse_orientation("sideways"), CdError);
}
