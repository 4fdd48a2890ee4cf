#include "microga/report.hpp"

#include <json.hpp>
#include <ostream>
#include <string>

#include "microga/engine.hpp"
#include "microga/errors.hpp"

namespace microga {

std::string_view to_string(Format format) noexcept {
  switch (format) {
    case Format::paper:
      return "paper";
    case Format::csv:
      return "csv";
    case Format::json:
      return "json";
  }
  return "paper";
}

Format parse_format(std::string_view text) {
  if (text == "paper") return Format::paper;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ConfigError("unknown format '" + std::string(text) + "' (expected paper, csv or json)");
}

Reporter::Reporter(Format format, int verbosity, std::ostream& sink)
    : format_(format), verbosity_(verbosity), sink_(&sink) {
  if (verbosity < 0 || verbosity > kMaxVerbosity) {
    throw ConfigError("verbosity " + std::to_string(verbosity) + " is outside [0, " +
                      std::to_string(kMaxVerbosity) + "]");
  }
}

void Reporter::flush_or_throw() {
  if (!*sink_) throw IoError("failed to write report output");
}

void Reporter::run_header() {
  switch (format_) {
    case Format::paper:
      *sink_ << "\n\n";
      break;
    case Format::csv:
      *sink_ << "generation,top_fitness,sum_fitness,best_a,best_b\n";
      break;
    case Format::json:
      break;
  }
  flush_or_throw();
}

void Reporter::generation(const Engine& engine, unsigned generation) {
  this->generation(engine.state(), engine.pop_size(), generation);
}

void Reporter::generation(const PopulationState& s, std::size_t n, unsigned generation) {
  std::ostream& out = *sink_;

  if (format_ == Format::csv) {
    out << generation << ',' << s.top_fitness << ',' << s.sum_fitness << ',' << s.best_a << ','
        << s.best_b << '\n';
    flush_or_throw();
    return;
  }
  if (format_ != Format::paper) return;

  out << "generation=" << generation << " , top fitness=" << s.top_fitness
      << " , sum fitness=" << s.sum_fitness << '\n';

  if (verbosity_ >= 1) {
    out << "top candidate (BIN):" << to_binary(s.best_a) << ' ' << to_binary(s.best_b) << '\n';
    out << "top candidate (DEC):" << s.best_a << ' ' << s.best_b << '\n';
  }

  if (verbosity_ >= 2) {
    out << "printing each individual+fitness\n";
    for (std::size_t i = 0; i < n; ++i) {
      out << to_binary(s.t0_a[i]) << ' ' << to_binary(s.t0_b[i]) << " (" << s.fitness[i] << ")\n";
    }
    out << "printing next gen expected count\n";
    for (std::size_t i = 0; i < n; ++i) {
      out << "individual=" << i << " , " << s.cdf[i] << '\n';
    }
    out << "printing each of next gen individuals\n";
    for (std::size_t i = 0; i < n; ++i) {
      out << to_binary(s.t1_a[i]) << ' ' << to_binary(s.t1_b[i]) << '\n';
    }
  }
  flush_or_throw();
}

void Reporter::finalize(const RunResult& result) {
  if (format_ != Format::json) return;

  const GaConfig& c = result.config;
  nlohmann::ordered_json doc;
  doc["config"] = {{"pop_size", c.pop_size},
                   {"n_generations", c.n_generations},
                   {"mutation_per_mille", c.mutation_per_mille},
                   {"mode", std::string(to_string(c.mode))},
                   {"seed", c.seed}};
  auto generations = nlohmann::ordered_json::array();
  for (const GenerationStats& g : result.per_generation) {
    generations.push_back({{"generation", g.generation},
                           {"top_fitness", g.top_fitness},
                           {"sum_fitness", g.sum_fitness},
                           {"best_a", g.best.a},
                           {"best_b", g.best.b}});
  }
  doc["generations"] = std::move(generations);
  doc["best_ever"] = {{"a", result.best_ever.a},
                      {"b", result.best_ever.b},
                      {"fitness", result.best_ever_fitness},
                      {"first_attained_at", result.first_attained_at}};
  *sink_ << doc.dump(2) << '\n';
  flush_or_throw();
}

}  // namespace microga
