#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "microga/engine.hpp"
#include "microga/errors.hpp"
#include "microga/report.hpp"

using namespace microga;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string render(Format format, int verbosity, const GaConfig& config) {
  std::ostringstream out;
  Reporter reporter(format, verbosity, out);
  run(config, bitcount_fitness, &reporter);
  return out.str();
}

GaConfig small_config() {
  GaConfig c;
  c.pop_size = 6;
  c.n_generations = 4;
  c.mutation_per_mille = 20;
  c.seed = 12;
  return c;
}

}  // namespace

TEST_CASE("paper summary line spacing") {
  PopulationState s;
  s.top_fitness = 28;
  s.sum_fitness = 1742;
  std::ostringstream out;
  Reporter(Format::paper, 0, out).generation(s, 2, 5);
  CHECK(out.str() == "generation=5 , top fitness=28 , sum fitness=1742\n");
}

TEST_CASE("summary line from a processed engine") {
  GaConfig c;
  c.pop_size = 100;
  c.seed = 1;
  Engine e(c);
  // 62 x 28 + 6 x 1 = 1742
  for (std::size_t i = 0; i < 100; ++i) e.set_fitness(i, i < 62 ? 28 : (i < 68 ? 1 : 0));
  e.process_generation();
  std::ostringstream out;
  Reporter(Format::paper, 0, out).generation(e, 5);
  CHECK(out.str() == "generation=5 , top fitness=28 , sum fitness=1742\n");
}

TEST_CASE("verbosity 1 prints the best candidate in binary and decimal") {
  PopulationState s;
  s.top_fitness = 2;
  s.sum_fitness = 2;
  s.best_a = 5;
  s.best_b = 0;
  std::ostringstream out;
  Reporter(Format::paper, 1, out).generation(s, 1, 0);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 3);
  CHECK(lines[1] == "top candidate (BIN):101 0");
  CHECK(lines[2] == "top candidate (DEC):5 0");
}

TEST_CASE("verbosity 2 prints one line per individual in each section") {
  PopulationState s;
  s.t0_a = {{3, 0}};
  s.t0_b = {{1, 8}};
  s.fitness = {{3, 1}};
  s.cdf = {{3, 4}};
  s.t1_a = {{2, 1}};
  s.t1_b = {{0, 9}};
  std::ostringstream out;
  Reporter(Format::paper, 2, out).generation(s, 2, 7);
  const std::vector<std::string> expected = {
      "generation=7 , top fitness=0 , sum fitness=0",
      "top candidate (BIN):0 0",
      "top candidate (DEC):0 0",
      "printing each individual+fitness",
      "11 1 (3)",
      "0 1000 (1)",
      "printing next gen expected count",
      "individual=0 , 3",
      "individual=1 , 4",
      "printing each of next gen individuals",
      "10 0",
      "1 1001",
  };
  CHECK(lines_of(out.str()) == expected);
}

TEST_CASE("verbosity levels are cumulative") {
  const GaConfig c = small_config();
  const auto v0 = lines_of(render(Format::paper, 0, c));
  const auto v1 = lines_of(render(Format::paper, 1, c));
  const auto v2 = lines_of(render(Format::paper, 2, c));
  // Per generation: v0 has 1 line, v1 adds 2, v2 adds 3 headers + 3 * pop.
  const std::size_t per_v2 = 3 + 3 + 3 * c.pop_size;
  REQUIRE(v0.size() == 2 + c.n_generations);
  REQUIRE(v1.size() == 2 + 3 * c.n_generations);
  REQUIRE(v2.size() == 2 + per_v2 * c.n_generations);
  for (std::size_t g = 0; g < c.n_generations; ++g) {
    CHECK(v1[2 + 3 * g] == v0[2 + g]);
    for (std::size_t k = 0; k < 3; ++k) CHECK(v2[2 + per_v2 * g + k] == v1[2 + 3 * g + k]);
  }
}

TEST_CASE("run headers per format") {
  std::ostringstream paper, csv, json;
  Reporter(Format::paper, 0, paper).run_header();
  Reporter(Format::csv, 0, csv).run_header();
  Reporter(Format::json, 0, json).run_header();
  CHECK(paper.str() == "\n\n");
  CHECK(csv.str() == "generation,top_fitness,sum_fitness,best_a,best_b\n");
  CHECK(json.str().empty());
}

TEST_CASE("csv output has a header and one row per generation") {
  GaConfig c = small_config();
  c.n_generations = 100;
  const auto lines = lines_of(render(Format::csv, 0, c));
  REQUIRE(lines.size() == 101);
  const RunResult r = run(c, bitcount_fitness);
  std::ostringstream row;
  const auto& g = r.per_generation[42];
  row << 42 << ',' << g.top_fitness << ',' << g.sum_fitness << ',' << g.best.a << ',' << g.best.b;
  CHECK(lines[43] == row.str());
}

TEST_CASE("json document") {
  GaConfig c = small_config();
  c.n_generations = 30;
  const auto doc = nlohmann::json::parse(render(Format::json, 2, c));
  CHECK(doc["config"]["pop_size"] == 6);
  CHECK(doc["config"]["mode"] == "strict");
  CHECK(doc["config"]["seed"] == 12);
  REQUIRE(doc["generations"].size() == 30);
  unsigned max_top = 0;
  for (const auto& g : doc["generations"]) max_top = std::max(max_top, g["top_fitness"].get<unsigned>());
  CHECK(doc["best_ever"]["fitness"] == max_top);
  const RunResult r = run(c, bitcount_fitness);
  CHECK(doc["best_ever"]["a"] == r.best_ever.a);
  CHECK(doc["best_ever"]["first_attained_at"] == r.first_attained_at);
}

TEST_CASE("json seed keeps full 64-bit precision") {
  GaConfig c = small_config();
  c.seed = 0xFFFFFFFFFFFFFFFFULL;
  const auto doc = nlohmann::json::parse(render(Format::json, 0, c));
  CHECK(doc["config"]["seed"].get<std::uint64_t>() == c.seed);
}

TEST_CASE("reporter errors") {
  std::ostringstream out;
  CHECK_THROWS_AS(Reporter(Format::paper, 3, out), ConfigError);
  CHECK_THROWS_AS(Reporter(Format::paper, -1, out), ConfigError);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
  CHECK(parse_format("csv") == Format::csv);

  std::ostringstream broken;
  broken.setstate(std::ios::badbit);
  Reporter r(Format::paper, 0, broken);
  CHECK_THROWS_AS(r.run_header(), IoError);
}
