#include "identities.hpp"

#include <string>

namespace cdt {

bool associator_vanishes(const Element& x, const Element& y, const Element& z, Orientation o) {
  return mul(mul(x, y, o), z, o) == mul(x, mul(y, z, o), o);
}

bool alternative_holds_at(const Element& x, const Element& y, Orientation o) {
  // Left: x(xy) = (xx)y. Right: (yx)x = y(xx).
  return associator_vanishes(x, x, y, o) && associator_vanishes(y, x, x, o);
}

bool flexible_holds_at(const Element& x, const Element& y, Orientation o) {
  return mul(mul(x, y, o), x, o) == mul(x, mul(y, x, o), o);
}

bool moufang_holds_at(const Element& x, const Element& y, const Element& z, Orientation o) {
  // z(x(zy)) = ((zx)z)y
  Element m1l = mul(z, mul(x, mul(z, y, o), o), o);
  Element m1r = mul(mul(mul(z, x, o), z, o), y, o);
  if (!(m1l == m1r)) return false;
  // ((xz)y)z = x(z(yz))
  Element m2l = mul(mul(mul(x, z, o), y, o), z, o);
  Element m2r = mul(x, mul(z, mul(y, z, o), o), o);
  if (!(m2l == m2r)) return false;
  // (zx)(yz) = (z(xy))z
  Element m3l = mul(mul(z, x, o), mul(y, z, o), o);
  Element m3r = mul(mul(z, mul(x, y, o), o), z, o);
  return m3l == m3r;
}

bool norm_composition_holds_at(const Element& x, const Element& y, Orientation o) {
  return mul(x, y, o).norm(o) == x.norm(o) * y.norm(o);
}

namespace {

using PairPredicate = bool (*)(const Element&, const Element&, Orientation);
using TriplePredicate = bool (*)(const Element&, const Element&, const Element&, Orientation);

LawReport pair_campaign(const char* law, PairPredicate pred, const Signature& sig,
                        const SampleSpec& spec, Orientation o) {
  LawReport report{.law = law, .signature = sig, .mode = spec, .orientation = o};
  auto run = [&](const Element& x, const Element& y) {
    if (pred(x, y, o)) return true;
    report.holds = false;
    report.witness = {x, y};
    return false;
  };
  if (spec.kind == SampleSpec::Kind::kExhaustiveBasis) {
    for (std::size_t j = 0; j < sig.dim(); ++j) {
      for (std::size_t k = 0; k < sig.dim(); ++k) {
        if (!run(Element::basis(sig, j), Element::basis(sig, k))) return report;
      }
    }
  }
  Rng rng(spec.seed);
  for (int i = 0; i < spec.samples; ++i) {
    Element x = random_element(rng, sig);
    Element y = random_element(rng, sig);
    if (!run(x, y)) return report;
  }
  return report;
}

LawReport triple_campaign(const char* law, TriplePredicate pred, const Signature& sig,
                          const SampleSpec& spec, Orientation o) {
  LawReport report{.law = law, .signature = sig, .mode = spec, .orientation = o};
  auto run = [&](const Element& x, const Element& y, const Element& z) {
    if (pred(x, y, z, o)) return true;
    report.holds = false;
    report.witness = {x, y, z};
    return false;
  };
  if (spec.kind == SampleSpec::Kind::kExhaustiveBasis) {
    for (std::size_t j = 0; j < sig.dim(); ++j) {
      for (std::size_t k = 0; k < sig.dim(); ++k) {
        for (std::size_t l = 0; l < sig.dim(); ++l) {
          if (!run(Element::basis(sig, j), Element::basis(sig, k), Element::basis(sig, l))) {
            return report;
          }
        }
      }
    }
  }
  Rng rng(spec.seed);
  for (int i = 0; i < spec.samples; ++i) {
    Element x = random_element(rng, sig);
    Element y = random_element(rng, sig);
    Element z = random_element(rng, sig);
    if (!run(x, y, z)) return report;
  }
  return report;
}

}  // namespace

LawReport check_alternative(const Signature& sig, const SampleSpec& spec, Orientation o) {
  // Not multilinear (x repeats), so exhaustive mode also runs the dense
  // random supplement; pair_campaign does both.
  return pair_campaign("alternative", &alternative_holds_at, sig, spec, o);
}

LawReport check_flexible(const Signature& sig, const SampleSpec& spec, Orientation o) {
  return pair_campaign("flexible", &flexible_holds_at, sig, spec, o);
}

LawReport check_moufang(const Signature& sig, const SampleSpec& spec, Orientation o) {
  return triple_campaign("moufang", &moufang_holds_at, sig, spec, o);
}

LawReport check_norm_composition(const Signature& sig, const SampleSpec& spec, Orientation o) {
  return pair_campaign("norm", &norm_composition_holds_at, sig, spec, o);
}

LawReport nucleus_membership(const Element& x, Nucleus which, const SampleSpec& spec,
                             Orientation o) {
  const Signature& sig = x.signature();
  const char* law = which == Nucleus::kLeft    ? "nucleus-left"
                    : which == Nucleus::kMiddle ? "nucleus-middle"
                                                : "nucleus-right";
  LawReport report{.law = law, .signature = sig, .mode = spec, .orientation = o};
  auto holds_at = [&](const Element& u, const Element& v) {
    switch (which) {
      case Nucleus::kLeft:
        return associator_vanishes(x, u, v, o);
      case Nucleus::kMiddle:
        return associator_vanishes(u, x, v, o);
      case Nucleus::kRight:
        return associator_vanishes(u, v, x, o);
    }
    return false;
  };
  auto run = [&](const Element& u, const Element& v) {
    if (holds_at(u, v)) return true;
    report.holds = false;
    report.witness = {x, u, v};
    return false;
  };
  if (spec.kind == SampleSpec::Kind::kExhaustiveBasis) {
    report.reduction = "the defining law is bilinear in the two free slots; basis pairs decide it";
    for (std::size_t j = 0; j < sig.dim(); ++j) {
      for (std::size_t k = 0; k < sig.dim(); ++k) {
        if (!run(Element::basis(sig, j), Element::basis(sig, k))) return report;
      }
    }
  } else {
    Rng rng(spec.seed);
    for (int i = 0; i < spec.samples; ++i) {
      Element u = random_element(rng, sig);
      Element v = random_element(rng, sig);
      if (!run(u, v)) return report;
    }
  }
  return report;
}

LawReport center_membership(const Element& x, const SampleSpec& spec, Orientation o) {
  const Signature& sig = x.signature();
  LawReport report{.law = "center", .signature = sig, .mode = spec, .orientation = o};
  report.reduction = "commutation is linear in the free slot and each nucleus law is bilinear";
  for (std::size_t k = 0; k < sig.dim(); ++k) {
    Element u = Element::basis(sig, k);
    if (!(mul(x, u, o) == mul(u, x, o))) {
      report.holds = false;
      report.witness = {x, u};
      report.detail = "commutation fails";
      return report;
    }
  }
  for (Nucleus which : {Nucleus::kLeft, Nucleus::kMiddle, Nucleus::kRight}) {
    LawReport sub = nucleus_membership(x, which, spec, o);
    if (!sub.holds) {
      report.holds = false;
      report.witness = sub.witness;
      report.detail = sub.law + std::string(" fails");
      return report;
    }
  }
  return report;
}

std::vector<ZeroDivisorPair> find_zero_divisors(const Signature& sig,
                                                const ZeroDivisorBudget& budget, Orientation o) {
  std::vector<ZeroDivisorPair> found;
  const std::size_t dim = sig.dim();
  std::vector<Element> candidates;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (int s : {1, -1}) {
        Element x = Element::basis(sig, i);
        Element ej = Element::basis(sig, j);
        candidates.push_back(s > 0 ? x + ej : x - ej);
      }
    }
  }
  auto consider = [&](const Element& x, const Element& y) {
    if (x.is_zero() || y.is_zero()) return;
    if (mul(x, y, o).is_zero()) found.push_back(ZeroDivisorPair{x, y});
  };
  for (const Element& x : candidates) {
    for (const Element& y : candidates) {
      consider(x, y);
    }
  }
  Rng rng(budget.seed);
  for (int i = 0; i < budget.random_samples; ++i) {
    Element x = random_element(rng, sig);
    Element y = random_element(rng, sig);
    consider(x, y);
  }
  return found;
}

}  // namespace cdt
