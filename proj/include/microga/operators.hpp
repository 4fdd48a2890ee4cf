#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "microga/genome.hpp"

// Stateless building blocks of one generation. The engine composes them over
// its fixed buffers; they are exposed separately so each can be tested on
// hand-built inputs.
namespace microga {

/// Crossover sites are drawn from [0, kCrossoverSiteBound).
inline constexpr std::uint32_t kCrossoverSiteBound = 31;
/// Mutation gates draw from [1, kMutationDrawBound).
inline constexpr std::uint32_t kMutationDrawBound = 1000;

/// Ascending bubble sort of `fitness` with `a` and `b` swapped in lockstep.
/// Only strictly greater neighbours swap, so equal fitness keeps its order.
/// All three spans must have the same length.
void bubble_sort_by_fitness(std::span<FitnessValue> fitness, std::span<std::uint16_t> a,
                            std::span<std::uint16_t> b) noexcept;

/// Inclusive prefix sum: cdf[i] = fitness[0] + ... + fitness[i].
void build_cdf(std::span<const FitnessValue> fitness, std::span<std::uint32_t> cdf) noexcept;

/// Roulette lookup: the j >= 1 with cdf[j-1] <= r < cdf[j], or 0 if none.
std::size_t roulette_index(std::span<const std::uint32_t> cdf, std::uint32_t r) noexcept;

/// Split-half single-point crossover.
///
/// For site < 16 bits [site..15] of the a-halves are exchanged and the
/// b-halves are exchanged entirely. For site >= 16 the a-halves stay and bits
/// [32-site..15] of the b-halves are exchanged. Site 16 is therefore a no-op.
void crossover(std::uint16_t& first_a, std::uint16_t& second_a, std::uint16_t& first_b,
               std::uint16_t& second_b, unsigned site) noexcept;

inline void crossover(Chromosome& first, Chromosome& second, unsigned site) noexcept {
  crossover(first.a, second.a, first.b, second.b, site);
}

}  // namespace microga
