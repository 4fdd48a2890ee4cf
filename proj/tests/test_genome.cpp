#include <doctest.h>

#include <random>

#include "microga/errors.hpp"
#include "microga/genome.hpp"

using namespace microga;

TEST_CASE("popcount32 counts both halves") {
  CHECK(popcount32({0x0000, 0x0000}) == 0);
  CHECK(popcount32({0xFFFF, 0xFFFF}) == 32);
  CHECK(popcount32({0x00FF, 0x0F0F}) == 16);
}

TEST_CASE("bit write then read round-trips for every position") {
  std::mt19937 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto half = static_cast<std::uint16_t>(gen());
    for (unsigned j = 0; j < 16; ++j) {
      const bool value = (gen() & 1U) != 0;
      const std::uint16_t before = half;
      write_bit(half, j, value);
      REQUIRE(read_bit(half, j) == value);
      // Other bits untouched.
      REQUIRE(((half ^ before) & ~(1U << j)) == 0);
    }
  }
  // Least-significant-first indexing.
  CHECK(read_bit(0x0001, 0));
  CHECK(read_bit(0x8000, 15));
  CHECK_FALSE(read_bit(0x8000, 0));
}

TEST_CASE("binary rendering drops leading zeros") {
  CHECK(to_binary(0) == "0");
  CHECK(to_binary(1) == "1");
  CHECK(to_binary(5) == "101");
  CHECK(to_binary(0x8000) == "1000000000000000");
  CHECK(to_binary(0xFFFF) == "1111111111111111");
}

TEST_CASE("population state starts zeroed and compares equal") {
  PopulationState a, b;
  CHECK(a == b);
  for (std::size_t i = 0; i < kCapacity; ++i) {
    CHECK(a.t0_a[i] == 0);
    CHECK(a.t1_b[i] == 0);
    CHECK(a.cdf[i] == 0);
    CHECK(a.fitness[i] == 0);
  }
  CHECK(a.top_fitness == 0);
  CHECK(a.sum_fitness == 0);
}

TEST_CASE("config validation") {
  GaConfig c;
  c.mode = Mode::compat;
  c.pop_size = 99;
  CHECK_NOTHROW(c.validate());
  c.pop_size = 1;
  CHECK_NOTHROW(c.validate());
  c.pop_size = 100;
  CHECK_NOTHROW(c.validate());
  c.pop_size = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.pop_size = 101;
  CHECK_THROWS_AS(c.validate(), ConfigError);

  c.mode = Mode::strict;
  c.pop_size = 99;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("odd"), ConfigError);
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("--mode compat"), ConfigError);
  c.pop_size = 1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.pop_size = 2;
  CHECK_NOTHROW(c.validate());

  c.n_generations = 0;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("generation"), ConfigError);
  c.n_generations = 65535;
  CHECK_NOTHROW(c.validate());
  c.n_generations = 65536;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.n_generations = 10;

  c.mutation_per_mille = 1000;
  CHECK_NOTHROW(c.validate());
  c.mutation_per_mille = 1001;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("mutation"), ConfigError);
}

TEST_CASE("mode names") {
  CHECK(parse_mode("compat") == Mode::compat);
  CHECK(parse_mode("strict") == Mode::strict);
  CHECK(to_string(Mode::compat) == "compat");
  CHECK_THROWS_AS(parse_mode("loose"), ConfigError);
}
