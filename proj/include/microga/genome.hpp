#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace microga {

/// Number of slots in every population buffer. Fixed; not a tunable.
inline constexpr std::size_t kCapacity = 100;

/// Largest fitness a well-behaved problem may report.
inline constexpr unsigned kMaxFitness = 100;

inline constexpr unsigned kMaxGenerations = 65535;
inline constexpr unsigned kMaxMutationPerMille = 1000;

/// Fitness as stored on the 16-bit target. Strict mode keeps it in [0, 100].
using FitnessValue = std::uint16_t;

/// Bit j of a 16-bit half, least-significant first.
constexpr bool read_bit(std::uint16_t half, unsigned j) noexcept {
  return ((half >> j) & 1U) != 0;
}

constexpr void write_bit(std::uint16_t& half, unsigned j, bool value) noexcept {
  const auto mask = static_cast<std::uint16_t>(1U << j);
  half = value ? static_cast<std::uint16_t>(half | mask)
               : static_cast<std::uint16_t>(half & ~mask);
}

/// A 32-bit genome stored as two 16-bit halves.
struct Chromosome {
  std::uint16_t a = 0;
  std::uint16_t b = 0;

  friend constexpr bool operator==(const Chromosome&, const Chromosome&) noexcept = default;
};

constexpr unsigned popcount32(Chromosome c) noexcept {
  return static_cast<unsigned>(std::popcount(c.a) + std::popcount(c.b));
}

enum class Mode { compat, strict };

std::string_view to_string(Mode mode) noexcept;
/// Accepts "compat" or "strict"; throws ConfigError otherwise.
Mode parse_mode(std::string_view text);

struct GaConfig {
  unsigned pop_size = 99;
  unsigned n_generations = 100;
  unsigned mutation_per_mille = 1;
  Mode mode = Mode::strict;
  std::uint64_t seed = 0;

  /// Throws ConfigError naming the first violated bound.
  void validate() const;

  friend bool operator==(const GaConfig&, const GaConfig&) = default;
};

/// The engine's persistent buffers. Every array is zero-initialized and keeps
/// its full capacity regardless of pop_size.
struct PopulationState {
  std::array<std::uint16_t, kCapacity> t0_a{};
  std::array<std::uint16_t, kCapacity> t0_b{};
  std::array<std::uint16_t, kCapacity> t1_a{};
  std::array<std::uint16_t, kCapacity> t1_b{};
  std::array<FitnessValue, kCapacity> fitness{};
  std::array<std::uint32_t, kCapacity> cdf{};
  FitnessValue top_fitness = 0;
  std::uint32_t sum_fitness = 0;
  std::uint16_t best_a = 0;
  std::uint16_t best_b = 0;

  friend bool operator==(const PopulationState&, const PopulationState&) = default;
};

struct GenerationStats {
  unsigned generation = 0;
  FitnessValue top_fitness = 0;
  std::uint32_t sum_fitness = 0;
  Chromosome best;

  friend bool operator==(const GenerationStats&, const GenerationStats&) = default;
};

struct RunResult {
  GaConfig config;
  std::vector<GenerationStats> per_generation;
  Chromosome best_ever;
  FitnessValue best_ever_fitness = 0;
  unsigned first_attained_at = 0;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Binary digits without leading zeros; zero renders as "0".
std::string to_binary(std::uint32_t value);

}  // namespace microga
