#pragma once

#include <array>
#include <optional>
#include <string>

#include "algebra.hpp"
#include "report.hpp"

namespace cdt {

// Row-major 2x2 matrix [[a, b], [c, d]] over one tower algebra.
struct Mat2 {
  Element a, b, c, d;

  // All four entries must share a signature; throws kSignatureMismatch.
  const Signature& entry_signature() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::string format() const;
};

Mat2 identity_mat(const Signature& entry_sig);

// Interlaced product: every entry is a sum of two products, and within each
// product the factor order alternates between natural (R) and reversed (L)
// relative to the ordinary row-by-column rule:
//
//   [ a a' + c' b    b' a + b d' ]
//   [ a' c + d c'    c b' + d' d ]
Mat2 interlaced_mul(const Mat2& x, const Mat2& y, Orientation o = Orientation::kDefault);

// Ordinary row-by-column product, for contrast.
Mat2 ordinary_mul(const Mat2& x, const Mat2& y, Orientation o = Orientation::kDefault);

// One term of an interlaced entry, with its order tag.
struct RlTerm {
  std::string factors;  // e.g. "c'*b": primed names come from the right operand
  char tag;             // 'R' natural order, 'L' reversed
  Element value;
};

struct RlEntry {
  std::array<RlTerm, 2> terms;
  std::string tag_pattern() const;  // "R+L" or "L+R"
};

// The full term/tag breakdown of an interlaced product; entries[r][c] is the
// (r, c) entry. The tag grid is always [[R+L, L+R], [L+R, R+L]].
struct RlPatternReport {
  std::array<std::array<RlEntry, 2>, 2> entries;
};

RlPatternReport rl_pattern_report(const Mat2& x, const Mat2& y,
                                  Orientation o = Orientation::kDefault);

// Embedded model of one algebra element: M(o) = [[q, g p*], [p, q*]] where
// o = (q, p) and g is the outermost doubling sign.
struct EmbeddedMat {
  Mat2 mat;
  int gamma;
};

EmbeddedMat m_embed(const Element& x);           // level >= 1; throws kStructure at level 0
Element m_extract(const EmbeddedMat& m);         // throws kStructure if shape is broken
bool is_embedded_shape(const Mat2& m, int gamma);

// Does M(x) (interlaced) M(y) = M(x y)? On failure reports the first
// differing entry.
struct MnemonicCheck {
  bool holds = true;
  char differing_entry = 0;  // 'a'..'d'
  std::optional<Element> lhs;
  std::optional<Element> rhs;
};

MnemonicCheck mnemonic_check(const Element& x, const Element& y,
                             Orientation o = Orientation::kDefault);

// Adjugate X# = [[d, -b], [-c, a]] and the two one-sided determinants
// D_L = d a - c b, D_R = a d - c b.
Mat2 adjugate(const Mat2& x);
Element delta_left(const Mat2& x, Orientation o = Orientation::kDefault);
Element delta_right(const Mat2& x, Orientation o = Orientation::kDefault);

// Candidate one-sided inverse built from the adjugate: for the left side
// every adjugate entry is left-multiplied by inverse(D_L), for the right
// side right-multiplied by inverse(D_R). Whether the hypothesis (nucleus
// membership of delta on the matching side) and the conclusion (the exact
// identity) hold is measured, never assumed. Throws kNotInvertible when
// delta has zero norm.
struct OneSidedInverseReport {
  char side;                      // 'L' or 'R'
  Element delta;
  bool delta_in_nucleus = false;  // left nucleus for 'L', right nucleus for 'R'
  Mat2 candidate;
  bool identity_holds = false;    // candidate (interlaced) x == I, resp. x (interlaced) candidate == I
};

OneSidedInverseReport interlaced_left_inverse(const Mat2& x,
                                              Orientation o = Orientation::kDefault);
OneSidedInverseReport interlaced_right_inverse(const Mat2& x,
                                               Orientation o = Orientation::kDefault);

// Textbook embeddings recovered as the level-1 and level-2 division cases of
// m_embed: complex numbers as [[x, -y], [y, x]] over the rationals, and
// quaternions as [[z, -conj(w)], [w, conj(z)]] over the complexes.
Mat2 classic_embed_complex(const Element& z);     // level 1, signs "-"
Mat2 classic_embed_quaternion(const Element& q);  // level 2, signs "--"

// Campaigns over a whole signature, in the uniform report shape. The
// mnemonic law is bilinear in (x, y), so exhaustive basis pairs decide it;
// random mode spot-checks dense pairs. Adjugate identities are checked on
// arbitrary matrices over the parent (entry) algebra.
LawReport mnemonic_campaign(const Signature& sig, const SampleSpec& spec,
                            Orientation o = Orientation::kDefault);
LawReport adjugate_campaign(const Signature& sig, const SampleSpec& spec,
                            Orientation o = Orientation::kDefault);

}  // namespace cdt
