#pragma once

#include <cstdint>

namespace microga {

/// Seedable splitmix64 generator.
///
/// The whole state is one 64-bit accumulator, so a copy of an Rng replays
/// exactly the same stream as the original. Every engine owns its own Rng.
class Rng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  constexpr Rng() noexcept = default;
  constexpr explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  [[nodiscard]] constexpr std::uint64_t state() const noexcept { return state_; }

  constexpr std::uint64_t next_u64() noexcept {
    state_ += kGamma;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Low 16 bits of the next output (the target's `random()` stored into a
  /// 16-bit unsigned int).
  constexpr std::uint16_t next_u16() noexcept {
    return static_cast<std::uint16_t>(next_u64() & 0xFFFFU);
  }

  /// Half-open draw in [lo, hi). When hi == lo the result is lo and the state
  /// is left untouched. Keeps modulo bias on purpose.
  /// Throws RangeError when lo > hi.
  std::uint32_t draw_range(std::uint32_t lo, std::uint32_t hi);

  friend constexpr bool operator==(const Rng&, const Rng&) noexcept = default;

 private:
  std::uint64_t state_ = 0;
};

constexpr Rng seed(std::uint64_t value) noexcept { return Rng{value}; }

}  // namespace microga
