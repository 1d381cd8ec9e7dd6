#pragma once

#include <vector>

#include "algebra.hpp"
#include "report.hpp"

namespace cdt {

// Single-instance predicates. Campaigns loop over these, and a failing
// report's witness reproduces the violation through the same predicate.
bool associator_vanishes(const Element& x, const Element& y, const Element& z,
                         Orientation o = Orientation::kDefault);
bool alternative_holds_at(const Element& x, const Element& y,
                          Orientation o = Orientation::kDefault);
bool flexible_holds_at(const Element& x, const Element& y,
                       Orientation o = Orientation::kDefault);
bool moufang_holds_at(const Element& x, const Element& y, const Element& z,
                      Orientation o = Orientation::kDefault);
bool norm_composition_holds_at(const Element& x, const Element& y,
                               Orientation o = Orientation::kDefault);

// Law campaigns. Exhaustive mode runs every basis tuple and, because none of
// these laws is multilinear, adds `spec.samples` seeded dense tuples on top.
// Random mode runs only the seeded dense tuples.
LawReport check_alternative(const Signature& sig, const SampleSpec& spec,
                            Orientation o = Orientation::kDefault);
LawReport check_flexible(const Signature& sig, const SampleSpec& spec,
                         Orientation o = Orientation::kDefault);
LawReport check_moufang(const Signature& sig, const SampleSpec& spec,
                        Orientation o = Orientation::kDefault);
LawReport check_norm_composition(const Signature& sig, const SampleSpec& spec,
                                 Orientation o = Orientation::kDefault);

enum class Nucleus { kLeft, kMiddle, kRight };

// Membership of one fixed element in a nucleus. The defining law is bilinear
// in the two free slots, so basis pairs decide it; random mode spot-checks.
LawReport nucleus_membership(const Element& x, Nucleus which, const SampleSpec& spec,
                             Orientation o = Orientation::kDefault);

// Commutation with every basis element plus membership in all three nuclei.
LawReport center_membership(const Element& x, const SampleSpec& spec,
                            Orientation o = Orientation::kDefault);

struct ZeroDivisorPair {
  Element x, y;
};

struct ZeroDivisorBudget {
  int random_samples = 1000;
  std::uint64_t seed = 0;
};

// Searches the structured family (e_i + s e_j, e_k + t e_l) with s, t = +1
// or -1 exhaustively, then `random_samples` seeded dense pairs. Every
// returned pair has x != 0, y != 0 and x y = 0 (revalidated before return).
std::vector<ZeroDivisorPair> find_zero_divisors(const Signature& sig,
                                                const ZeroDivisorBudget& budget,
                                                Orientation o = Orientation::kDefault);

}  // namespace cdt
