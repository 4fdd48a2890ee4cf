#pragma once

#include <cstddef>
#include <functional>

#include "microga/genome.hpp"
#include "microga/prng.hpp"
#include "microga/problems.hpp"

namespace microga {

class Reporter;

enum class Phase { AwaitingFitness, Processed };

/// Steps run by Engine::process_generation, in order.
enum class Step { aggregate, sort, select, mate };

/// Generational GA over fixed-capacity buffers.
///
/// One generation is driven as:
///
///   engine.evaluate_with(problem);   // or set_fitness() per individual
///   engine.process_generation();     // stats, sort + cdf, selection, mating
///   ...read statistics / report...
///   engine.advance();                // t1 becomes t0
///
/// Calls out of that order throw SequenceError.
///
/// Compat mode reproduces the original source exactly, including the phantom
/// slot at index pop_size that odd populations mate with, and mutation that
/// only ever overwrites the b-half of the first pair member. Strict mode
/// requires an even population, rejects fitness above 100, and lets the two
/// mutation gates target the a- and b-half respectively.
class Engine {
 public:
  using StepObserver = std::function<void(Step, const Engine&)>;

  /// Validates `config`, zeroes all buffers, seeds the generator and fills
  /// the current generation with random halves.
  explicit Engine(const GaConfig& config);

  [[nodiscard]] const GaConfig& config() const noexcept { return config_; }
  [[nodiscard]] const PopulationState& state() const noexcept { return state_; }
  [[nodiscard]] const Rng& rng() const noexcept { return rng_; }
  [[nodiscard]] Phase phase() const noexcept { return phase_; }
  [[nodiscard]] std::size_t pop_size() const noexcept { return config_.pop_size; }

  /// Current-generation individual i. Throws IndexError unless i < pop_size.
  [[nodiscard]] Chromosome chromosome(std::size_t i) const;

  /// Throws IndexError, SequenceError after process_generation, and in strict
  /// mode RangeError for values above 100.
  void set_fitness(std::size_t i, FitnessValue value);

  /// set_fitness(i, problem(chromosome(i))) for every i in index order.
  void evaluate_with(const FitnessFunction& problem);

  /// Runs aggregate_stats, sort_and_build_cdf, select_into_next and mate.
  /// `observer`, when set, sees the engine after each step.
  void process_generation(const StepObserver& observer = {});

  /// Copies t1 into t0 for indices below pop_size and re-arms fitness entry.
  void advance();

  /// Refills t0_a then t0_b (two separate passes) with 16-bit draws.
  void randomize_population() noexcept;

  // Individual generation steps. process_generation() is the normal entry
  // point; these are public for inspection and only valid before it.
  void aggregate_stats();
  void sort_and_build_cdf();
  void select_into_next();
  void mate();

 private:
  void require_awaiting(const char* what) const;
  void check_index(std::size_t i) const;

  GaConfig config_;
  PopulationState state_;
  Rng rng_;
  Phase phase_ = Phase::AwaitingFitness;
};

/// Full run: per generation evaluate, process, report, advance.
/// `reporter` may be null.
RunResult run(const GaConfig& config, const FitnessFunction& problem, Reporter* reporter = nullptr);

}  // namespace microga
