#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>

#include "microga/genome.hpp"

namespace microga {

class Engine;

enum class Format { paper, csv, json };

std::string_view to_string(Format format) noexcept;
/// Accepts "paper", "csv" or "json"; throws ConfigError otherwise.
Format parse_format(std::string_view text);

/// Writes run output to a text sink.
///
/// `paper` reproduces the original serial-monitor text, with verbosity 0..2
/// adding detail cumulatively. `csv` streams one row per generation. `json`
/// writes a single document at the end of the run. Lines end in '\n'.
class Reporter {
 public:
  static constexpr int kMaxVerbosity = 2;

  /// Throws ConfigError if verbosity is outside [0, 2].
  Reporter(Format format, int verbosity, std::ostream& sink);

  [[nodiscard]] Format format() const noexcept { return format_; }
  [[nodiscard]] int verbosity() const noexcept { return verbosity_; }

  void run_header();
  /// Expects the engine between process_generation() and advance().
  void generation(const Engine& engine, unsigned generation);
  void generation(const PopulationState& state, std::size_t pop_size, unsigned generation);
  void finalize(const RunResult& result);

 private:
  void flush_or_throw();

  Format format_;
  int verbosity_;
  std::ostream* sink_;
};

}  // namespace microga
