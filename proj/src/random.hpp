#pragma once

#include <cstdint>

namespace cdt {

// Deterministic splitmix64 stream. Used everywhere a seeded sample is drawn
// so that reports are reproducible across platforms and standard-library
// versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, n); n must be positive. The modulo bias is
  // irrelevant for the tiny ranges used here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Inclusive bounds.
  long int_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace cdt
