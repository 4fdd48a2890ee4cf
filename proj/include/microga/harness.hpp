#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "microga/genome.hpp"
#include "microga/problems.hpp"

namespace microga {

/// Parses a decimal or 0x-prefixed hexadecimal 64-bit seed.
/// Throws ConfigError on malformed or out-of-range input.
std::uint64_t parse_seed(std::string_view text);

/// Parses `A..B` (inclusive) or a comma-separated list such as `3,5,8`.
/// Throws ConfigError for an empty list, a reversed range or bad numbers.
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

struct SweepSpec {
  GaConfig base;
  std::vector<std::uint64_t> seeds;
  std::string problem = "bitcount";
};

struct SweepRow {
  std::uint64_t seed = 0;
  FitnessValue best_ever = 0;
  unsigned first_attained_at = 0;
  FitnessValue final_top = 0;
  std::uint32_t final_sum = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Runs one GA per seed on up to `jobs` threads (0 = hardware concurrency).
/// Rows come back in the order of spec.seeds. If any run fails, throws
/// Error naming the first failing seed in that order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned jobs = 0);

/// Header `seed,best_ever,first_attained_at,final_top,final_sum` plus one row
/// per entry.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct BufferFootprint {
  std::string name;
  std::size_t bytes = 0;
};

/// Persistent memory of the engine as laid out on a 16-bit-int target.
struct FootprintReport {
  std::vector<BufferFootprint> arrays;
  std::vector<BufferFootprint> scalars;
  std::size_t array_bytes = 0;
  std::size_t scalar_bytes = 0;
  std::size_t total_bytes = 0;
};

/// Size of `unsigned int` on the 8-bit AVR target.
inline constexpr std::size_t kTargetIntBytes = 2;
/// SRAM of the ATmega328.
inline constexpr std::size_t kTargetRamBytes = 2048;

FootprintReport compute_footprint();
void write_footprint(std::ostream& out, const FootprintReport& report);

}  // namespace microga
