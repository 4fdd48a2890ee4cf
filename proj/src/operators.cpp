#include "microga/operators.hpp"

#include <utility>

namespace microga {

void bubble_sort_by_fitness(std::span<FitnessValue> fitness, std::span<std::uint16_t> a,
                            std::span<std::uint16_t> b) noexcept {
  const std::size_t n = fitness.size();
  if (n < 2) return;
  for (std::size_t pass = 0; pass + 1 < n; ++pass) {
    for (std::size_t y = 0; y + pass + 1 < n; ++y) {
      if (fitness[y] > fitness[y + 1]) {
        std::swap(fitness[y], fitness[y + 1]);
        std::swap(a[y], a[y + 1]);
        std::swap(b[y], b[y + 1]);
      }
    }
  }
}

void build_cdf(std::span<const FitnessValue> fitness, std::span<std::uint32_t> cdf) noexcept {
  std::uint32_t running = 0;
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    running += fitness[i];
    cdf[i] = running;
  }
}

std::size_t roulette_index(std::span<const std::uint32_t> cdf, std::uint32_t r) noexcept {
  for (std::size_t j = 1; j < cdf.size(); ++j) {
    if (r >= cdf[j - 1] && r < cdf[j]) return j;
  }
  return 0;
}

namespace {

void swap_bits(std::uint16_t& x, std::uint16_t& y, unsigned from) noexcept {
  if (from >= 16) return;
  const auto mask = static_cast<std::uint16_t>(0xFFFFU << from);
  const auto diff = static_cast<std::uint16_t>((x ^ y) & mask);
  x ^= diff;
  y ^= diff;
}

}  // namespace

void crossover(std::uint16_t& first_a, std::uint16_t& second_a, std::uint16_t& first_b,
               std::uint16_t& second_b, unsigned site) noexcept {
  if (site < 16) {
    swap_bits(first_a, second_a, site);
    swap_bits(first_b, second_b, 0);
  } else {
    swap_bits(first_b, second_b, 32 - site);
  }
}

}  // namespace microga
