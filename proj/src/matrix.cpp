#include "matrix.hpp"

#include <sstream>

#include "identities.hpp"

namespace cdt {

namespace {

Rational gamma_scalar(int gamma) { return gamma > 0 ? Rational(1) : Rational(-1); }

bool in_required_nucleus(const Element& delta, char side, Orientation o) {
  Nucleus which = side == 'L' ? Nucleus::kLeft : Nucleus::kRight;
  SampleSpec spec{.kind = SampleSpec::Kind::kExhaustiveBasis, .seed = 0, .samples = 0};
  return nucleus_membership(delta, which, spec, o).holds;
}

}  // namespace

const Signature& Mat2::entry_signature() const {
  const Signature& sig = a.signature();
  if (b.signature() != sig || c.signature() != sig || d.signature() != sig) {
    throw CdError(Errc::kSignatureMismatch, "matrix entries live in different signatures");
  }
  return sig;
}

std::string Mat2::format() const {
  std::ostringstream out;
  out << "[ " << a.format() << " | " << b.format() << " ]\n";
  out << "[ " << c.format() << " | " << d.format() << " ]";
  return out.str();
}

Mat2 identity_mat(const Signature& entry_sig) {
  return Mat2{Element::one(entry_sig), Element::zero(entry_sig), Element::zero(entry_sig),
              Element::one(entry_sig)};
}

Mat2 interlaced_mul(const Mat2& x, const Mat2& y, Orientation o) {
  x.entry_signature();
  if (x.a.signature() != y.entry_signature()) {
    throw CdError(Errc::kSignatureMismatch, "interlaced product across signatures");
  }
  return Mat2{
      mul(x.a, y.a, o) + mul(y.c, x.b, o),  // a a' + c' b
      mul(y.b, x.a, o) + mul(x.b, y.d, o),  // b' a + b d'
      mul(y.a, x.c, o) + mul(x.d, y.c, o),  // a' c + d c'
      mul(x.c, y.b, o) + mul(y.d, x.d, o),  // c b' + d' d
  };
}

Mat2 ordinary_mul(const Mat2& x, const Mat2& y, Orientation o) {
  x.entry_signature();
  if (x.a.signature() != y.entry_signature()) {
    throw CdError(Errc::kSignatureMismatch, "matrix product across signatures");
  }
  return Mat2{
      mul(x.a, y.a, o) + mul(x.b, y.c, o),
      mul(x.a, y.b, o) + mul(x.b, y.d, o),
      mul(x.c, y.a, o) + mul(x.d, y.c, o),
      mul(x.c, y.b, o) + mul(x.d, y.d, o),
  };
}

std::string RlEntry::tag_pattern() const { return std::string{terms[0].tag, '+', terms[1].tag}; }

RlPatternReport rl_pattern_report(const Mat2& x, const Mat2& y, Orientation o) {
  RlPatternReport r;
  r.entries[0][0] = RlEntry{{RlTerm{"a*a'", 'R', mul(x.a, y.a, o)},
                             RlTerm{"c'*b", 'L', mul(y.c, x.b, o)}}};
  r.entries[0][1] = RlEntry{{RlTerm{"b'*a", 'L', mul(y.b, x.a, o)},
                             RlTerm{"b*d'", 'R', mul(x.b, y.d, o)}}};
  r.entries[1][0] = RlEntry{{RlTerm{"a'*c", 'L', mul(y.a, x.c, o)},
                             RlTerm{"d*c'", 'R', mul(x.d, y.c, o)}}};
  r.entries[1][1] = RlEntry{{RlTerm{"c*b'", 'R', mul(x.c, y.b, o)},
                             RlTerm{"d'*d", 'L', mul(y.d, x.d, o)}}};
  const char expect[2][2][2] = {{{'R', 'L'}, {'L', 'R'}}, {{'L', 'R'}, {'R', 'L'}}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (r.entries[i][j].terms[0].tag != expect[i][j][0] ||
          r.entries[i][j].terms[1].tag != expect[i][j][1]) {
        throw CdError(Errc::kStructure, "interlaced tag pattern violated");
      }
    }
  }
  return r;
}

EmbeddedMat m_embed(const Element& x) {
  if (x.level() == 0) {
    throw CdError(Errc::kStructure, "level-0 element has no matrix model");
  }
  auto [q, p] = x.split();
  const int gamma = x.signature().top_sign();
  return EmbeddedMat{
      Mat2{q, gamma_scalar(gamma) * p.conjugate(), p, q.conjugate()},
      gamma,
  };
}

bool is_embedded_shape(const Mat2& m, int gamma) {
  return m.b == gamma_scalar(gamma) * m.c.conjugate() && m.d == m.a.conjugate();
}

Element m_extract(const EmbeddedMat& m) {
  m.mat.entry_signature();
  if (m.gamma != 1 && m.gamma != -1) {
    throw CdError(Errc::kInvalidArgument, "gamma must be +1 or -1");
  }
  if (!is_embedded_shape(m.mat, m.gamma)) {
    throw CdError(Errc::kStructure, "matrix is not in the image of the embedding (b != gamma*conj(c) or d != conj(a))");
  }
  return Element::join(m.mat.a, m.mat.c, m.gamma);
}

MnemonicCheck mnemonic_check(const Element& x, const Element& y, Orientation o) {
  if (x.signature() != y.signature()) {
    throw CdError(Errc::kSignatureMismatch, "mnemonic check across signatures");
  }
  Mat2 lhs = interlaced_mul(m_embed(x).mat, m_embed(y).mat, o);
  Mat2 rhs = m_embed(mul(x, y, o)).mat;
  MnemonicCheck r;
  const Element* l[4] = {&lhs.a, &lhs.b, &lhs.c, &lhs.d};
  const Element* h[4] = {&rhs.a, &rhs.b, &rhs.c, &rhs.d};
  for (int i = 0; i < 4; ++i) {
    if (!(*l[i] == *h[i])) {
      r.holds = false;
      r.differing_entry = static_cast<char>('a' + i);
      r.lhs = *l[i];
      r.rhs = *h[i];
      return r;
    }
  }
  return r;
}

Mat2 adjugate(const Mat2& x) { return Mat2{x.d, -x.b, -x.c, x.a}; }

Element delta_left(const Mat2& x, Orientation o) {
  return mul(x.d, x.a, o) - mul(x.c, x.b, o);
}

Element delta_right(const Mat2& x, Orientation o) {
  return mul(x.a, x.d, o) - mul(x.c, x.b, o);
}

static OneSidedInverseReport one_sided_inverse(const Mat2& x, char side, Orientation o) {
  Element delta = side == 'L' ? delta_left(x, o) : delta_right(x, o);
  InverseResult inv = delta.inverse(o);  // throws kNotInvertible on zero norm
  Mat2 adj = adjugate(x);
  Mat2 candidate =
      side == 'L'
          ? Mat2{mul(inv.value, adj.a, o), mul(inv.value, adj.b, o), mul(inv.value, adj.c, o),
                 mul(inv.value, adj.d, o)}
          : Mat2{mul(adj.a, inv.value, o), mul(adj.b, inv.value, o), mul(adj.c, inv.value, o),
                 mul(adj.d, inv.value, o)};
  Mat2 product = side == 'L' ? interlaced_mul(candidate, x, o) : interlaced_mul(x, candidate, o);
  return OneSidedInverseReport{
      .side = side,
      .delta = delta,
      .delta_in_nucleus = in_required_nucleus(delta, side, o),
      .candidate = candidate,
      .identity_holds = product == identity_mat(x.entry_signature()),
  };
}

OneSidedInverseReport interlaced_left_inverse(const Mat2& x, Orientation o) {
  return one_sided_inverse(x, 'L', o);
}

OneSidedInverseReport interlaced_right_inverse(const Mat2& x, Orientation o) {
  return one_sided_inverse(x, 'R', o);
}

static void require_division(const Element& x, int level, const char* what) {
  if (x.level() != level || x.signature() != Signature::division(level)) {
    throw CdError(Errc::kInvalidArgument,
                  std::string(what) + " requires the division signature at level " +
                      std::to_string(level));
  }
}

Mat2 classic_embed_complex(const Element& z) {
  require_division(z, 1, "classic_embed_complex");
  return m_embed(z).mat;
}

Mat2 classic_embed_quaternion(const Element& q) {
  require_division(q, 2, "classic_embed_quaternion");
  return m_embed(q).mat;
}

LawReport mnemonic_campaign(const Signature& sig, const SampleSpec& spec, Orientation o) {
  if (sig.level() < 1) {
    throw CdError(Errc::kInvalidArgument, "mnemonic needs level >= 1");
  }
  LawReport report{.law = "mnemonic", .signature = sig, .mode = spec, .orientation = o};
  auto run = [&](const Element& x, const Element& y) {
    MnemonicCheck c = mnemonic_check(x, y, o);
    if (!c.holds) {
      report.holds = false;
      report.witness = {x, y};
      report.detail = std::string("entry '") + c.differing_entry + "' differs: " +
                      c.lhs->format() + " vs " + c.rhs->format();
      return false;
    }
    return true;
  };
  if (spec.kind == SampleSpec::Kind::kExhaustiveBasis) {
    report.reduction = "both sides are bilinear in (x, y); basis pairs decide the law";
    for (std::size_t j = 0; j < sig.dim(); ++j) {
      for (std::size_t k = 0; k < sig.dim(); ++k) {
        if (!run(Element::basis(sig, j), Element::basis(sig, k))) return report;
      }
    }
  } else {
    Rng rng(spec.seed);
    for (int i = 0; i < spec.samples; ++i) {
      Element x = random_element(rng, sig);
      Element y = random_element(rng, sig);
      if (!run(x, y)) return report;
    }
  }
  return report;
}

LawReport adjugate_campaign(const Signature& sig, const SampleSpec& spec, Orientation o) {
  if (sig.level() < 1) {
    throw CdError(Errc::kInvalidArgument, "adjugate campaign needs level >= 1");
  }
  const Signature entry = sig.parent();
  LawReport report{.law = "adjugate", .signature = sig, .mode = spec, .orientation = o};
  auto run = [&](const Mat2& x) {
    Element dl = delta_left(x, o);
    Element dr = delta_right(x, o);
    Mat2 left = interlaced_mul(adjugate(x), x, o);
    Mat2 right = interlaced_mul(x, adjugate(x), o);
    Element zero = Element::zero(entry);
    bool ok = left == Mat2{dl, zero, zero, dl} && right == Mat2{dr, zero, zero, dr};
    if (!ok) {
      report.holds = false;
      report.witness = {x.a, x.b, x.c, x.d};
      report.detail = "adjugate identity failed; witness lists entries a, b, c, d";
    }
    return ok;
  };
  if (spec.kind == SampleSpec::Kind::kExhaustiveBasis) {
    report.reduction =
        "each side is multilinear in the four entries, so basis-entry matrices over the level " +
        std::to_string(entry.level()) + " entry algebra decide the law; " +
        std::to_string(spec.samples) + " dense random matrices follow anyway";
    const std::size_t dim = entry.dim();
    for (std::size_t ia = 0; ia < dim; ++ia) {
      for (std::size_t ib = 0; ib < dim; ++ib) {
        for (std::size_t ic = 0; ic < dim; ++ic) {
          for (std::size_t id = 0; id < dim; ++id) {
            Mat2 x{Element::basis(entry, ia), Element::basis(entry, ib),
                   Element::basis(entry, ic), Element::basis(entry, id)};
            if (!run(x)) return report;
          }
        }
      }
    }
  }
  Rng rng(spec.seed);
  for (int i = 0; i < spec.samples; ++i) {
    Mat2 x{random_element(rng, entry), random_element(rng, entry), random_element(rng, entry),
           random_element(rng, entry)};
    if (!run(x)) return report;
  }
  return report;
}

}  // namespace cdt
