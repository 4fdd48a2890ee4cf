#include "microga/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <optional>
#include <ostream>
#include <thread>

#include "microga/engine.hpp"
#include "microga/errors.hpp"

namespace microga {

std::uint64_t parse_seed(std::string_view text) {
  int base = 10;
  std::string_view digits = text;
  if (digits.starts_with("0x") || digits.starts_with("0X")) {
    base = 16;
    digits.remove_prefix(2);
  }
  std::uint64_t value = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, value, base);
  if (digits.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError("invalid seed '" + std::string(text) +
                      "' (expected a decimal or 0x-prefixed hex 64-bit value)");
  }
  return value;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  if (text.empty()) throw ConfigError("seed list is empty");

  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const std::uint64_t first = parse_seed(text.substr(0, dots));
    const std::uint64_t last = parse_seed(text.substr(dots + 2));
    if (first > last) {
      throw ConfigError("seed range '" + std::string(text) + "' is reversed");
    }
    if (last - first >= 1'000'000) {
      throw ConfigError("seed range '" + std::string(text) + "' has more than 1000000 seeds");
    }
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = first;; ++s) {
      seeds.push_back(s);
      if (s == last) break;
    }
    return seeds;
  }

  std::vector<std::uint64_t> seeds;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma - start);
    if (item.empty()) throw ConfigError("seed list '" + std::string(text) + "' has an empty entry");
    seeds.push_back(parse_seed(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return seeds;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned jobs) {
  if (spec.seeds.empty()) throw ConfigError("sweep needs at least one seed");
  const FitnessFunction problem = parse_problem(spec.problem);

  const std::size_t count = spec.seeds.size();
  std::vector<SweepRow> rows(count);
  std::vector<std::optional<std::string>> failures(count);

  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        GaConfig config = spec.base;
        config.seed = spec.seeds[k];
        const RunResult result = run(config, problem);
        const GenerationStats& last = result.per_generation.back();
        rows[k] = SweepRow{config.seed, result.best_ever_fitness, result.first_attained_at,
                           last.top_fitness, last.sum_fitness};
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (std::size_t k = 0; k < count; ++k) {
    if (failures[k]) {
      throw Error("run for seed " + std::to_string(spec.seeds[k]) + " failed: " + *failures[k]);
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "seed,best_ever,first_attained_at,final_top,final_sum\n";
  for (const SweepRow& r : rows) {
    out << r.seed << ',' << r.best_ever << ',' << r.first_attained_at << ',' << r.final_top << ','
        << r.final_sum << '\n';
  }
  if (!out) throw IoError("failed to write sweep summary");
}

FootprintReport compute_footprint() {
  FootprintReport report;
  constexpr std::size_t kArrayBytes = kCapacity * kTargetIntBytes;
  for (const char* name : {"t0_fitness", "t1_a_population", "t1_b_population", "t0_a_population",
                           "t0_b_population", "next_gen_expected_count"}) {
    report.arrays.push_back({name, kArrayBytes});
  }
  // ngenerations is stored by the original class but never read after
  // construction, so it is not counted as working state.
  for (const char* name : {"top_fitness_val", "sum_fitness_val", "bestcandidate_a",
                           "bestcandidate_b", "bitmutation", "popsize"}) {
    report.scalars.push_back({name, kTargetIntBytes});
  }
  for (const auto& a : report.arrays) report.array_bytes += a.bytes;
  for (const auto& s : report.scalars) report.scalar_bytes += s.bytes;
  report.total_bytes = report.array_bytes + report.scalar_bytes;
  return report;
}

void write_footprint(std::ostream& out, const FootprintReport& report) {
  for (const auto& a : report.arrays) {
    out << "array  " << a.name << " = " << a.bytes << " B\n";
  }
  for (const auto& s : report.scalars) {
    out << "scalar " << s.name << " = " << s.bytes << " B\n";
  }
  out << "arrays = " << report.array_bytes << " B\n";
  out << "scalars = " << report.scalar_bytes << " B\n";
  out << "total = " << report.total_bytes << " B\n";
  out << "fits in " << kTargetRamBytes
      << " B SRAM: " << (report.total_bytes < kTargetRamBytes ? "yes" : "no") << '\n';
  if (!out) throw IoError("failed to write footprint report");
}

}  // namespace microga
