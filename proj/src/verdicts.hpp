#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "algebra.hpp"

namespace cdt {

// One cell of the expected-verdict table. `signs` is either a concrete
// pattern ("--+") or "*" meaning every pattern at that level.
struct VerdictCell {
  std::string law;
  int level;
  std::string signs;
  bool holds;
};

// The table shipped in data/expected_verdicts.json (embedded at build time;
// this is the single machine-readable source both the CLI and the tests
// consume). Lookup prefers an exact (law, level, signs) row over a wildcard
// row. Returns nullopt for cells outside the documented envelope.
std::optional<bool> expected_verdict(std::string_view law, const Signature& sig);

// The raw embedded table text, for reexport.
std::string_view expected_verdicts_raw();

// Laws the verifier knows about.
bool is_known_law(std::string_view law);

}  // namespace cdt
