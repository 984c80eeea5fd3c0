#include "tensegrity/random.hpp"

#include <stdexcept>

namespace tensegrity {

std::uint32_t Lcg64::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return static_cast<std::uint32_t>(state_ >> 32);
}

long Lcg64::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

}  // namespace tensegrity
