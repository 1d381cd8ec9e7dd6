#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace cdt {

// How a law check draws its test tuples.
struct SampleSpec {
  enum class Kind { kExhaustiveBasis, kRandom };
  Kind kind = Kind::kExhaustiveBasis;
  std::uint64_t seed = 0;
  int samples = 1000;  // random tuples; exhaustive runs add these on top for
                       // laws that are not multilinear
};

// Uniform machine-checkable outcome of one verification campaign.
struct LawReport {
  std::string law;
  Signature signature;
  SampleSpec mode;
  Orientation orientation = Orientation::kDefault;
  bool holds = true;
  std::vector<Element> witness;          // offending tuple, empty when holds
  std::string detail;                    // human note about the failure, if any
  std::optional<std::string> reduction;  // why the sample set suffices, if it does
};

}  // namespace cdt
