#include "expr.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace cdt {

namespace {

constexpr std::size_t kMaxBasisSymbol = 63;

struct Token {
  enum class Kind { kNumber, kBasis, kFunc, kPlus, kMinus, kStar, kSlash, kLParen, kRParen, kEnd };
  Kind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Kind::kNumber, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
      std::string word(src.substr(start, i - start));
      if (word.size() >= 2 && word[0] == 'e' &&
          word.find_first_not_of("0123456789", 1) == std::string::npos) {
        out.push_back({Token::Kind::kBasis, std::move(word), start});
      } else if (word == "conj" || word == "norm" || word == "inv") {
        out.push_back({Token::Kind::kFunc, std::move(word), start});
      } else {
        throw ParseError(start, {"number", "basis symbol", "conj", "norm", "inv", "(", "-"},
                         "unknown symbol '" + word + "' at offset " + std::to_string(start));
      }
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Kind::kPlus; break;
      case '-': kind = Token::Kind::kMinus; break;
      case '*': kind = Token::Kind::kStar; break;
      case '/': kind = Token::Kind::kSlash; break;
      case '(': kind = Token::Kind::kLParen; break;
      case ')': kind = Token::Kind::kRParen; break;
      default:
        throw ParseError(start, {"number", "basis symbol", "conj", "norm", "inv", "(", "-"},
                         std::string("unexpected character '") + c + "' at offset " +
                             std::to_string(start));
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Token::Kind::kEnd, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Token::Kind::kEnd) {
      throw ParseError(peek().offset, {"+", "-", "*", "end of input"},
                       "unexpected trailing input at offset " + std::to_string(peek().offset));
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  static ExprPtr node(Expr::Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Token::Kind::kPlus || peek().kind == Token::Kind::kMinus) {
      const bool plus = take().kind == Token::Kind::kPlus;
      e = node(plus ? Expr::Kind::kAdd : Expr::Kind::kSub, std::move(e), term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (peek().kind == Token::Kind::kStar) {
      take();
      e = node(Expr::Kind::kMul, std::move(e), factor());
    }
    return e;
  }

  ExprPtr factor() {
    if (peek().kind == Token::Kind::kMinus) {
      take();
      return node(Expr::Kind::kNeg, factor());
    }
    return primary();
  }

  ExprPtr primary() {
    const Token t = take();
    switch (t.kind) {
      case Token::Kind::kNumber: {
        std::string literal = t.text;
        if (peek().kind == Token::Kind::kSlash) {
          take();
          const Token den = take();
          if (den.kind != Token::Kind::kNumber) {
            throw ParseError(den.offset, {"number"},
                             "expected denominator at offset " + std::to_string(den.offset));
          }
          if (den.text.find_first_not_of('0') == std::string::npos) {
            throw ParseError(den.offset, {},
                             "zero denominator in rational literal at offset " +
                                 std::to_string(den.offset));
          }
          literal += "/" + den.text;
        }
        ExprPtr e = node(Expr::Kind::kRational);
        e->value = Rational::parse(literal);
        return e;
      }
      case Token::Kind::kBasis: {
        const std::string digits = t.text.substr(1);
        unsigned long k = digits.size() > 6 ? kMaxBasisSymbol + 1 : std::stoul(digits);
        if (k > kMaxBasisSymbol) {
          throw ParseError(t.offset, {"e0..e63"},
                           "basis symbol " + t.text + " outside e0..e63 at offset " +
                               std::to_string(t.offset));
        }
        ExprPtr e = node(Expr::Kind::kBasis);
        e->basis_index = k;
        return e;
      }
      case Token::Kind::kFunc: {
        if (peek().kind != Token::Kind::kLParen) {
          throw ParseError(peek().offset, {"("},
                           "expected '(' after " + t.text + " at offset " +
                               std::to_string(peek().offset));
        }
        take();
        ExprPtr arg = expr();
        expect_rparen();
        Expr::Kind kind = t.text == "conj"   ? Expr::Kind::kConj
                          : t.text == "norm" ? Expr::Kind::kNorm
                                             : Expr::Kind::kInv;
        return node(kind, std::move(arg));
      }
      case Token::Kind::kLParen: {
        ExprPtr inner = expr();
        expect_rparen();
        return node(Expr::Kind::kGroup, std::move(inner));
      }
      default:
        throw ParseError(t.offset, {"number", "basis symbol", "conj", "norm", "inv", "(", "-"},
                         "expected an operand at offset " + std::to_string(t.offset));
    }
  }

  void expect_rparen() {
    if (peek().kind != Token::Kind::kRParen) {
      throw ParseError(peek().offset, {")", "+", "-", "*"},
                       "unclosed parenthesis at offset " + std::to_string(peek().offset));
    }
    take();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void print_into(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::kRational:
      out += e.value.str();
      return;
    case Expr::Kind::kBasis:
      out += "e" + std::to_string(e.basis_index);
      return;
    case Expr::Kind::kNeg:
      out += "(-";
      print_into(*e.lhs, out);
      out += ")";
      return;
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
    case Expr::Kind::kMul: {
      const char op = e.kind == Expr::Kind::kAdd ? '+' : e.kind == Expr::Kind::kSub ? '-' : '*';
      out += "(";
      print_into(*e.lhs, out);
      out += op;
      print_into(*e.rhs, out);
      out += ")";
      return;
    }
    case Expr::Kind::kConj:
    case Expr::Kind::kNorm:
    case Expr::Kind::kInv: {
      out += e.kind == Expr::Kind::kConj ? "conj(" : e.kind == Expr::Kind::kNorm ? "norm(" : "inv(";
      print_into(*e.lhs, out);
      out += ")";
      return;
    }
    case Expr::Kind::kGroup:
      print_into(*e.lhs, out);
      return;
  }
}

const Expr& peel(const Expr& e) {
  const Expr* p = &e;
  while (p->kind == Expr::Kind::kGroup) p = p->lhs.get();
  return *p;
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).run(); }

std::string print_expression(const Expr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

bool ast_equal_modulo_groups(const Expr& a, const Expr& b) {
  const Expr& x = peel(a);
  const Expr& y = peel(b);
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Expr::Kind::kRational:
      return x.value == y.value;
    case Expr::Kind::kBasis:
      return x.basis_index == y.basis_index;
    case Expr::Kind::kNeg:
    case Expr::Kind::kConj:
    case Expr::Kind::kNorm:
    case Expr::Kind::kInv:
      return ast_equal_modulo_groups(*x.lhs, *y.lhs);
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
    case Expr::Kind::kMul:
      return ast_equal_modulo_groups(*x.lhs, *y.lhs) && ast_equal_modulo_groups(*x.rhs, *y.rhs);
    case Expr::Kind::kGroup:
      return false;  // unreachable, peeled above
  }
  return false;
}

Element eval(const Expr& e, const Signature& sig, Orientation o) {
  switch (e.kind) {
    case Expr::Kind::kRational:
      return Element::scalar(sig, e.value);
    case Expr::Kind::kBasis:
      return Element::basis(sig, e.basis_index);
    case Expr::Kind::kNeg:
      return -eval(*e.lhs, sig, o);
    case Expr::Kind::kAdd:
      return eval(*e.lhs, sig, o) + eval(*e.rhs, sig, o);
    case Expr::Kind::kSub:
      return eval(*e.lhs, sig, o) - eval(*e.rhs, sig, o);
    case Expr::Kind::kMul:
      return mul(eval(*e.lhs, sig, o), eval(*e.rhs, sig, o), o);
    case Expr::Kind::kConj:
      return eval(*e.lhs, sig, o).conjugate();
    case Expr::Kind::kNorm:
      return Element::scalar(sig, eval(*e.lhs, sig, o).norm(o));
    case Expr::Kind::kInv:
      return eval(*e.lhs, sig, o).inverse(o).value;
    case Expr::Kind::kGroup:
      return eval(*e.lhs, sig, o);
  }
  throw CdError(Errc::kInvalidArgument, "corrupt expression tree");
}

namespace {

// All full parenthesizations of ops[i..j], as (printed form, value) pairs.
using GroupingTable = std::map<std::pair<std::size_t, std::size_t>,
                               std::vector<std::pair<std::string, Element>>>;

const std::vector<std::pair<std::string, Element>>& groupings(
    GroupingTable& table, const std::vector<std::string>& texts,
    const std::vector<Element>& values, std::size_t i, std::size_t j, Orientation o) {
  auto key = std::make_pair(i, j);
  if (auto it = table.find(key); it != table.end()) return it->second;
  std::vector<std::pair<std::string, Element>> out;
  if (i == j) {
    out.emplace_back(texts[i], values[i]);
  } else {
    for (std::size_t k = i; k < j; ++k) {
      const auto& lefts = groupings(table, texts, values, i, k, o);
      const auto& rights = groupings(table, texts, values, k + 1, j, o);
      for (const auto& [ls, lv] : lefts) {
        for (const auto& [rs, rv] : rights) {
          out.emplace_back("(" + ls + "*" + rs + ")", mul(lv, rv, o));
        }
      }
    }
  }
  return table[key] = std::move(out);
}

void collect_chain(const Expr& e, std::vector<const Expr*>& ops) {
  if (e.kind == Expr::Kind::kMul) {
    collect_chain(*e.lhs, ops);
    ops.push_back(e.rhs.get());
  } else {
    ops.push_back(&e);
  }
}

void scan(const Expr& e, bool left_child_of_mul, const Signature& sig, Orientation o,
          std::vector<ReassociationWarning>& out) {
  switch (e.kind) {
    case Expr::Kind::kMul: {
      if (!left_child_of_mul) {
        std::vector<const Expr*> ops;
        collect_chain(e, ops);
        if (ops.size() >= 3) {
          std::vector<std::string> texts;
          std::vector<Element> values;
          for (const Expr* op : ops) {
            texts.push_back(print_expression(*op));
            values.push_back(eval(*op, sig, o));
          }
          GroupingTable table;
          const auto& all = groupings(table, texts, values, 0, ops.size() - 1, o);
          for (std::size_t i = 1; i < all.size(); ++i) {
            if (!(all[i].second == all[0].second)) {
              std::string chain = texts[0];
              for (std::size_t t = 1; t < texts.size(); ++t) chain += "*" + texts[t];
              out.push_back(ReassociationWarning{
                  .chain = std::move(chain),
                  .grouping_a = all[0].first,
                  .grouping_b = all[i].first,
                  .value_a = all[0].second,
                  .value_b = all[i].second,
              });
              break;
            }
          }
        }
      }
      scan(*e.lhs, true, sig, o, out);
      scan(*e.rhs, false, sig, o, out);
      return;
    }
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      scan(*e.lhs, false, sig, o, out);
      scan(*e.rhs, false, sig, o, out);
      return;
    case Expr::Kind::kNeg:
    case Expr::Kind::kConj:
    case Expr::Kind::kNorm:
    case Expr::Kind::kInv:
    case Expr::Kind::kGroup:
      scan(*e.lhs, false, sig, o, out);
      return;
    case Expr::Kind::kRational:
    case Expr::Kind::kBasis:
      return;
  }
}

}  // namespace

std::vector<ReassociationWarning> reassociation_warnings(const Expr& e, const Signature& sig,
                                                         Orientation o) {
  std::vector<ReassociationWarning> out;
  scan(e, false, sig, o, out);
  return out;
}

}  // namespace cdt
