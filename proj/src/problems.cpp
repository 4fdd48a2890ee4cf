#include "microga/problems.hpp"

#include <charconv>
#include <string>

#include "microga/errors.hpp"

namespace microga {

FitnessValue bitcount_fitness(Chromosome c) noexcept {
  return static_cast<FitnessValue>(popcount32(c));
}

FitnessFunction pattern_fitness(Chromosome target) {
  return [target](Chromosome c) -> FitnessValue {
    const Chromosome agree{static_cast<std::uint16_t>(~(c.a ^ target.a)),
                           static_cast<std::uint16_t>(~(c.b ^ target.b))};
    return static_cast<FitnessValue>(popcount32(agree));
  };
}

FitnessFunction parse_problem(std::string_view name) {
  if (name == "bitcount") return bitcount_fitness;

  constexpr std::string_view kPatternPrefix = "pattern:";
  if (name.starts_with(kPatternPrefix)) {
    const std::string_view hex = name.substr(kPatternPrefix.size());
    std::uint32_t target = 0;
    const auto* end = hex.data() + hex.size();
    const auto [ptr, ec] = std::from_chars(hex.data(), end, target, 16);
    if (hex.size() == 8 && ec == std::errc{} && ptr == end) {
      return pattern_fitness(Chromosome{static_cast<std::uint16_t>(target >> 16),
                                        static_cast<std::uint16_t>(target & 0xFFFFU)});
    }
    throw ConfigError("pattern target '" + std::string(hex) +
                      "' must be exactly 8 hexadecimal digits");
  }
  throw ConfigError("unknown problem '" + std::string(name) +
                    "' (expected bitcount or pattern:<8 hex digits>)");
}

}  // namespace microga
