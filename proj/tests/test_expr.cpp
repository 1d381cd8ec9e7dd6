#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "expr.hpp"

using cdt::ast_equal_modulo_groups;
using cdt::CdError;
using cdt::Element;
using cdt::Errc;
using cdt::eval;
using cdt::Expr;
using cdt::mul;
using cdt::Orientation;
using cdt::parse_expression;
using cdt::ParseError;
using cdt::print_expression;
using cdt::Rational;
using cdt::Signature;

namespace {

std::string roundtrip(const char* src) { return print_expression(*parse_expression(src)); }

void expect_parse_error(const char* src, std::size_t offset, const char* needle) {
  CAPTURE(src);
  try {
    parse_expression(src);
    FAIL_CHECK("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.code() == Errc::kParse);
    CHECK(e.offset() == offset);
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("grammar shapes") {
  auto e = parse_expression("1/2 + e1*e2");
  REQUIRE(e->kind == Expr::Kind::kAdd);
  CHECK(e->lhs->kind == Expr::Kind::kRational);
  CHECK(e->lhs->value == Rational(1, 2));
  REQUIRE(e->rhs->kind == Expr::Kind::kMul);
  CHECK(e->rhs->lhs->basis_index == 1);
  CHECK(e->rhs->rhs->basis_index == 2);

  auto chain = parse_expression("e1-e2-e3");
  REQUIRE(chain->kind == Expr::Kind::kSub);
  CHECK(chain->lhs->kind == Expr::Kind::kSub);  // left associative
  CHECK(chain->rhs->basis_index == 3);

  auto grouped = parse_expression("e1*(e2*e3)");
  REQUIRE(grouped->kind == Expr::Kind::kMul);
  CHECK(grouped->lhs->kind == Expr::Kind::kBasis);
  REQUIRE(grouped->rhs->kind == Expr::Kind::kGroup);
  CHECK(grouped->rhs->lhs->kind == Expr::Kind::kMul);

  auto neg = parse_expression("-e1*e2");
  REQUIRE(neg->kind == Expr::Kind::kMul);  // unary minus binds to the factor
  CHECK(neg->lhs->kind == Expr::Kind::kNeg);

  auto funcs = parse_expression("conj(norm(e1)+inv(e2))");
  REQUIRE(funcs->kind == Expr::Kind::kConj);
  CHECK(funcs->lhs->kind == Expr::Kind::kAdd);

  CHECK(parse_expression("e007")->basis_index == 7);
  CHECK(parse_expression("e63")->basis_index == 63);
  CHECK(parse_expression(" 1 + 2 ")->kind == Expr::Kind::kAdd);
}

TEST_CASE("parse errors carry offsets and expectations") {
  expect_parse_error("e1*(e2*e3", 9, "unclosed parenthesis at offset 9");
  expect_parse_error("1/2/3", 3, "trailing input at offset 3");
  expect_parse_error("2e3", 1, "trailing input at offset 1");
  expect_parse_error("e64", 0, "outside e0..e63");
  expect_parse_error("e999999999999999999999", 0, "outside e0..e63");
  expect_parse_error("conj e1", 5, "expected '(' after conj");
  expect_parse_error("1/0", 2, "zero denominator");
  expect_parse_error("1//2", 2, "expected denominator");
  expect_parse_error("e1 + + e2", 5, "expected an operand at offset 5");
  expect_parse_error("", 0, "expected an operand");
  expect_parse_error("foo(e1)", 0, "unknown symbol 'foo'");
  expect_parse_error("@", 0, "unexpected character '@'");

  try {
    parse_expression("e1*(e2*e3");
  } catch (const ParseError& e) {
    const auto& exp = e.expected();
    CHECK(std::find(exp.begin(), exp.end(), ")") != exp.end());
  }
}

TEST_CASE("printing is canonical and idempotent") {
  CHECK(roundtrip("1/2 + e1*e2") == "(1/2+(e1*e2))");
  CHECK(roundtrip("-e1") == "(-e1)");
  CHECK(roundtrip("e1*(e2*e3)") == "(e1*(e2*e3))");
  CHECK(roundtrip("e1*e2*e3") == "((e1*e2)*e3)");
  CHECK(roundtrip("conj(e1)") == "conj(e1)");
  CHECK(roundtrip("norm(1/2)") == "norm(1/2)");
  CHECK(roundtrip("2/4") == "1/2");

  for (const char* src : {"1/2 + e1*e2", "e1*(e2*(e3+1))", "-(e1-e2)*e3", "inv(conj(e4))*norm(e2)",
                          "e1*e2*e4 - 3/2", "((e1))"}) {
    CAPTURE(src);
    std::string once = roundtrip(src);
    CHECK(roundtrip(once.c_str()) == once);
    CHECK(ast_equal_modulo_groups(*parse_expression(once), *parse_expression(src)));
  }
}

TEST_CASE("ast equality ignores groups but not grouping") {
  CHECK(ast_equal_modulo_groups(*parse_expression("(e1)*e2"), *parse_expression("e1*e2")));
  CHECK(ast_equal_modulo_groups(*parse_expression("((e1+e2))"), *parse_expression("e1+e2")));
  CHECK_FALSE(
      ast_equal_modulo_groups(*parse_expression("e1*(e2*e3)"), *parse_expression("e1*e2*e3")));
  CHECK_FALSE(ast_equal_modulo_groups(*parse_expression("e1+e2"), *parse_expression("e1-e2")));
  CHECK_FALSE(ast_equal_modulo_groups(*parse_expression("1/2"), *parse_expression("1/3")));
}

TEST_CASE("evaluation follows the tree exactly") {
  Signature o3 = Signature::division(3);
  Signature q = Signature::division(2);
  Signature so = Signature::split_octonion();

  CHECK(eval(*parse_expression("conj(e3)"), q) == -Element::basis(q, 3));
  CHECK(eval(*parse_expression("(e0+e4)*(e0-e4)"), so).is_zero());
  CHECK(eval(*parse_expression("2*3"), Signature{}) ==
        Element::scalar(Signature{}, Rational(6)));
  CHECK(eval(*parse_expression("norm(1/2+e1)"), Signature::division(1)) ==
        Element::scalar(Signature::division(1), Rational(5, 4)));
  CHECK(eval(*parse_expression("norm(e4)"), so) == Element::scalar(so, Rational(-1)));
  CHECK(eval(*parse_expression("inv(e1)"), q) == -Element::basis(q, 1));
  CHECK(eval(*parse_expression("1/2*e1 - e2"), q) ==
        Rational(1, 2) * Element::basis(q, 1) - Element::basis(q, 2));

  CHECK(eval(*parse_expression("e4*e5"), o3) == -Element::basis(o3, 1));
  CHECK(eval(*parse_expression("e4*e5"), o3, Orientation::kEq1Verbatim) ==
        Element::basis(o3, 1));

  // Grouping changes the value where associativity fails.
  CHECK(eval(*parse_expression("(e1*e2)*e4"), o3) == Element::basis(o3, 7));
  CHECK(eval(*parse_expression("e1*(e2*e4)"), o3) == -Element::basis(o3, 7));
  CHECK(eval(*parse_expression("e1*e2*e4"), o3) == Element::basis(o3, 7));  // left spine

  CHECK_THROWS_AS(eval(*parse_expression("e9"), o3), CdError);
  try {
    eval(*parse_expression("e9"), o3);
  } catch (const CdError& e) {
    CHECK(e.code() == Errc::kIndexRange);
  }
  CHECK_THROWS_AS(eval(*parse_expression("inv(e0+e1)"), Signature::parse("+")), CdError);
  CHECK_THROWS_AS(eval(*parse_expression("inv(0)"), q), CdError);
}

TEST_CASE("evaluation agrees with the basis table") {
  for (const char* pat : {"-", "--", "---", "--+"}) {
    Signature sig = Signature::parse(pat);
    auto table = cdt::mul_table(sig);
    for (std::size_t j = 0; j < sig.dim(); ++j) {
      for (std::size_t k = 0; k < sig.dim(); ++k) {
        std::string src = "e" + std::to_string(j) + "*e" + std::to_string(k);
        Element got = eval(*parse_expression(src), sig);
        Element want = Rational(table[j][k].sign) * Element::basis(sig, table[j][k].index);
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("evaluation is additive on parse trees") {
  Signature q = Signature::division(2);
  Element lhs = eval(*parse_expression("(1/2+e1)*(e2-3)"), q);
  Element manual = mul(Element::scalar(q, Rational(1, 2)) + Element::basis(q, 1),
                       Element::basis(q, 2) - Element::scalar(q, Rational(3)));
  CHECK(lhs == manual);
}

TEST_CASE("reassociation warnings") {
  Signature o3 = Signature::division(3);
  Signature q = Signature::division(2);

  auto warn = cdt::reassociation_warnings(*parse_expression("e1*e2*e4"), o3);
  REQUIRE(warn.size() == 1);
  CHECK(warn[0].chain == "e1*e2*e4");
  CHECK(warn[0].grouping_a != warn[0].grouping_b);
  CHECK(warn[0].value_a != warn[0].value_b);
  CHECK(eval(*parse_expression(warn[0].grouping_a), o3) == warn[0].value_a);
  CHECK(eval(*parse_expression(warn[0].grouping_b), o3) == warn[0].value_b);

  // Associating inputs stay silent.
  CHECK(cdt::reassociation_warnings(*parse_expression("e1*e2*e3"), o3).empty());
  CHECK(cdt::reassociation_warnings(*parse_expression("2*3*4"), o3).empty());
  CHECK(cdt::reassociation_warnings(*parse_expression("e1*e2"), o3).empty());
  CHECK(cdt::reassociation_warnings(*parse_expression("e1*e2*e3"), q).empty());

  // Explicit grouping is respected, inner chains are still scanned.
  CHECK(cdt::reassociation_warnings(*parse_expression("(e1*e2)*e4"), o3).empty());
  CHECK(cdt::reassociation_warnings(*parse_expression("e1*(e2*e4)"), o3).empty());
  CHECK(cdt::reassociation_warnings(*parse_expression("conj(e1*e2*e4)"), o3).size() == 1);
  CHECK(cdt::reassociation_warnings(*parse_expression("(e1*e2*e4)*e3"), o3).size() == 1);

  auto two = cdt::reassociation_warnings(*parse_expression("e1*e2*e4 + e2*e4*e3"), o3);
  CHECK(two.size() == 2);

  auto four = cdt::reassociation_warnings(*parse_expression("e1*e2*e4*e3"), o3);
  REQUIRE(four.size() == 1);
  CHECK(four[0].chain == "e1*e2*e4*e3");
  CHECK(eval(*parse_expression(four[0].grouping_a), o3) == four[0].value_a);
  CHECK(eval(*parse_expression(four[0].grouping_b), o3) == four[0].value_b);
}
