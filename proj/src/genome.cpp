#include "microga/genome.hpp"

#include <string>

#include "microga/errors.hpp"

namespace microga {

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::compat ? "compat" : "strict";
}

Mode parse_mode(std::string_view text) {
  if (text == "compat") return Mode::compat;
  if (text == "strict") return Mode::strict;
  throw ConfigError("unknown mode '" + std::string(text) + "' (expected compat or strict)");
}

void GaConfig::validate() const {
  if (pop_size < 1 || pop_size > kCapacity) {
    throw ConfigError("population size " + std::to_string(pop_size) +
                      " is outside [1, " + std::to_string(kCapacity) + "]");
  }
  if (mode == Mode::strict) {
    if (pop_size < 2) {
      throw ConfigError("population size " + std::to_string(pop_size) +
                        " is below 2; strict mode needs at least one mating pair");
    }
    if (pop_size % 2 != 0) {
      throw ConfigError("population size " + std::to_string(pop_size) +
                        " is odd; strict mode requires an even size (use --mode compat "
                        "to run odd sizes such as the original 99)");
    }
  }
  if (n_generations < 1 || n_generations > kMaxGenerations) {
    throw ConfigError("generation count " + std::to_string(n_generations) +
                      " is outside [1, " + std::to_string(kMaxGenerations) + "]");
  }
  if (mutation_per_mille > kMaxMutationPerMille) {
    throw ConfigError("mutation rate " + std::to_string(mutation_per_mille) +
                      " per mille is outside [0, " + std::to_string(kMaxMutationPerMille) + "]");
  }
}

std::string to_binary(std::uint32_t value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.insert(out.begin(), (value & 1U) != 0 ? '1' : '0');
    value >>= 1;
  }
  return out;
}

}  // namespace microga
