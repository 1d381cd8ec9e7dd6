#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"

namespace cdt {

// Parse tree for the small expression language:
//
//   expr    := term (('+' | '-') term)*         left associative
//   term    := factor ('*' factor)*             left associative
//   factor  := '-' factor | primary
//   primary := INT ['/' INT] | 'e'<k> | conj|norm|inv '(' expr ')' | '(' expr ')'
//
// Explicit parentheses become kGroup nodes, so the tree records the exact
// grouping of the source text.
struct Expr {
  enum class Kind {
    kRational,
    kBasis,
    kNeg,
    kAdd,
    kSub,
    kMul,
    kConj,
    kNorm,
    kInv,
    kGroup,
  };

  Kind kind;
  Rational value;                  // kRational
  std::size_t basis_index = 0;     // kBasis
  std::unique_ptr<Expr> lhs, rhs;  // binary nodes use both, unary nodes use lhs
};

using ExprPtr = std::unique_ptr<Expr>;

// Throws ParseError carrying the byte offset and the token kinds that would
// have been accepted at that point.
ExprPtr parse_expression(std::string_view text);

// Canonical fully parenthesized form. Group nodes print transparently (their
// child already prints parenthesized where it matters), so printing is
// idempotent: print(parse(print(parse(s)))) == print(parse(s)).
std::string print_expression(const Expr& e);

// Structural equality ignoring kGroup wrappers.
bool ast_equal_modulo_groups(const Expr& a, const Expr& b);

// Structural evaluation; grouping follows the tree exactly, nothing is ever
// reassociated. norm(x) evaluates to norm(x) * e_0.
Element eval(const Expr& e, const Signature& sig, Orientation o = Orientation::kDefault);

// A product chain of length >= 3 written without explicit parentheses whose
// groupings do not all agree.
struct ReassociationWarning {
  std::string chain;       // the chain as written, e.g. "e1*e2*e4"
  std::string grouping_a;  // first differing grouping, fully parenthesized
  std::string grouping_b;
  Element value_a;
  Element value_b;
};

// Evaluates every grouping of every unparenthesized product chain of length
// >= 3 and reports those with at least two differing values.
std::vector<ReassociationWarning> reassociation_warnings(const Expr& e, const Signature& sig,
                                                         Orientation o = Orientation::kDefault);

}  // namespace cdt
