#pragma once

#include "tensegrity/rational.hpp"

#include <cstdint>

namespace tensegrity {

/// Deterministic generator shared by every report that samples
/// configurations. The state update is the 64-bit LCG
///   state = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// seeded with state = seed, and next() returns the new state's high 32 bits.
/// uniform(lo, hi) is lo + next() mod (hi - lo + 1). Alternate
/// implementations reproduce reports by following this recipe exactly.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next();
  /// Integer in [lo, hi]; requires hi - lo + 1 <= 2^32.
  long uniform(long lo, long hi);
  Rational uniform_rational(long lo, long hi) { return Rational(uniform(lo, hi)); }

 private:
  std::uint64_t state_;
};

/// Coordinate range used for generic sampling.
inline constexpr long kSampleRange = 1'000'000;

}  // namespace tensegrity
