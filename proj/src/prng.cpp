#include "microga/prng.hpp"

#include <string>

#include "microga/errors.hpp"

namespace microga {

std::uint32_t Rng::draw_range(std::uint32_t lo, std::uint32_t hi) {
  if (lo > hi) {
    throw RangeError("draw_range: lower bound " + std::to_string(lo) +
                     " exceeds upper bound " + std::to_string(hi));
  }
  if (lo == hi) return lo;
  const auto low32 = static_cast<std::uint32_t>(next_u64() & 0xFFFFFFFFULL);
  return lo + low32 % (hi - lo);
}

}  // namespace microga
