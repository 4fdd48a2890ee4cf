#pragma once

#include <functional>
#include <string_view>

#include "microga/genome.hpp"

namespace microga {

/// Maps a chromosome to its fitness. Must be pure: the same chromosome always
/// gets the same value.
using FitnessFunction = std::function<FitnessValue(Chromosome)>;

/// OneMax: number of set bits over both halves, in [0, 32].
FitnessValue bitcount_fitness(Chromosome c) noexcept;

/// Number of bit positions (0..32) where the candidate agrees with `target`.
FitnessFunction pattern_fitness(Chromosome target);

/// Resolves a problem name: `bitcount`, or `pattern:HHHHLLLL` where the eight
/// hex digits give half a (high four) and half b (low four).
/// Throws ConfigError on anything else.
FitnessFunction parse_problem(std::string_view name);

}  // namespace microga
