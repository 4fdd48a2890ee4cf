#include "microga/engine.hpp"

#include <span>
#include <string>

#include "microga/errors.hpp"
#include "microga/operators.hpp"
#include "microga/report.hpp"

namespace microga {

Engine::Engine(const GaConfig& config) : config_(config), rng_(config.seed) {
  config_.validate();
  randomize_population();
}

void Engine::require_awaiting(const char* what) const {
  if (phase_ != Phase::AwaitingFitness) {
    throw SequenceError(std::string(what) +
                        " called after process_generation; call advance() first");
  }
}

void Engine::check_index(std::size_t i) const {
  if (i >= config_.pop_size) {
    throw IndexError("individual index " + std::to_string(i) + " is outside [0, " +
                     std::to_string(config_.pop_size) + ")");
  }
}

Chromosome Engine::chromosome(std::size_t i) const {
  check_index(i);
  return {state_.t0_a[i], state_.t0_b[i]};
}

void Engine::set_fitness(std::size_t i, FitnessValue value) {
  check_index(i);
  require_awaiting("set_fitness");
  if (config_.mode == Mode::strict && value > kMaxFitness) {
    throw RangeError("fitness " + std::to_string(value) + " for individual " + std::to_string(i) +
                     " exceeds " + std::to_string(kMaxFitness));
  }
  state_.fitness[i] = value;
}

void Engine::evaluate_with(const FitnessFunction& problem) {
  require_awaiting("evaluate_with");
  for (std::size_t i = 0; i < config_.pop_size; ++i) {
    set_fitness(i, problem(chromosome(i)));
  }
}

void Engine::randomize_population() noexcept {
  for (std::size_t i = 0; i < config_.pop_size; ++i) state_.t0_a[i] = rng_.next_u16();
  for (std::size_t i = 0; i < config_.pop_size; ++i) state_.t0_b[i] = rng_.next_u16();
}

void Engine::aggregate_stats() {
  require_awaiting("aggregate_stats");
  state_.top_fitness = 0;
  state_.sum_fitness = 0;
  for (std::size_t i = 0; i < config_.pop_size; ++i) {
    state_.sum_fitness += state_.fitness[i];
    // Strict comparison: ties keep the earliest individual, and an all-zero
    // generation leaves the previous best untouched.
    if (state_.fitness[i] > state_.top_fitness) {
      state_.top_fitness = state_.fitness[i];
      state_.best_a = state_.t0_a[i];
      state_.best_b = state_.t0_b[i];
    }
  }
}

void Engine::sort_and_build_cdf() {
  require_awaiting("sort_and_build_cdf");
  const std::size_t n = config_.pop_size;
  bubble_sort_by_fitness(std::span(state_.fitness).first(n), std::span(state_.t0_a).first(n),
                         std::span(state_.t0_b).first(n));
  build_cdf(std::span(state_.fitness).first(n), std::span(state_.cdf).first(n));
}

void Engine::select_into_next() {
  require_awaiting("select_into_next");
  const std::size_t n = config_.pop_size;
  const auto cdf = std::span<const std::uint32_t>(state_.cdf).first(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t r = rng_.draw_range(0, cdf[n - 1]);
    const std::size_t pick = roulette_index(cdf, r);
    state_.t1_a[i] = state_.t0_a[pick];
    state_.t1_b[i] = state_.t0_b[pick];
  }
}

void Engine::mate() {
  require_awaiting("mate");
  const unsigned rate = config_.mutation_per_mille;
  // Odd compat populations pair the last individual with slot pop_size.
  for (std::size_t i = 0; i < config_.pop_size; i += 2) {
    const std::uint32_t site = rng_.draw_range(0, kCrossoverSiteBound);
    const std::uint32_t gate_a = rng_.draw_range(1, kMutationDrawBound);
    const std::uint32_t gate_b = rng_.draw_range(1, kMutationDrawBound);
    if (config_.mode == Mode::compat) {
      // Both gates overwrite the b-half of individual i.
      if (gate_a <= rate) state_.t1_b[i] = rng_.next_u16();
      if (gate_b <= rate) state_.t1_b[i] = rng_.next_u16();
    } else {
      if (gate_a <= rate) state_.t1_a[i] = rng_.next_u16();
      if (gate_b <= rate) state_.t1_b[i] = rng_.next_u16();
    }
    crossover(state_.t1_a[i], state_.t1_a[i + 1], state_.t1_b[i], state_.t1_b[i + 1], site);
  }
}

void Engine::process_generation(const StepObserver& observer) {
  require_awaiting("process_generation");
  const auto notify = [&](Step step) {
    if (observer) observer(step, *this);
  };
  aggregate_stats();
  notify(Step::aggregate);
  sort_and_build_cdf();
  notify(Step::sort);
  select_into_next();
  notify(Step::select);
  mate();
  phase_ = Phase::Processed;
  notify(Step::mate);
}

void Engine::advance() {
  if (phase_ != Phase::Processed) {
    throw SequenceError("advance called before process_generation");
  }
  for (std::size_t i = 0; i < config_.pop_size; ++i) {
    state_.t0_a[i] = state_.t1_a[i];
    state_.t0_b[i] = state_.t1_b[i];
  }
  phase_ = Phase::AwaitingFitness;
}

RunResult run(const GaConfig& config, const FitnessFunction& problem, Reporter* reporter) {
  Engine engine(config);
  RunResult result;
  result.config = config;
  result.per_generation.reserve(config.n_generations);

  if (reporter != nullptr) reporter->run_header();
  for (unsigned g = 0; g < config.n_generations; ++g) {
    engine.evaluate_with(problem);
    engine.process_generation();
    if (reporter != nullptr) reporter->generation(engine, g);

    const PopulationState& s = engine.state();
    GenerationStats stats{g, s.top_fitness, s.sum_fitness, Chromosome{s.best_a, s.best_b}};
    if (g == 0 || stats.top_fitness > result.best_ever_fitness) {
      result.best_ever_fitness = stats.top_fitness;
      result.best_ever = stats.best;
      result.first_attained_at = g;
    }
    result.per_generation.push_back(stats);
    engine.advance();
  }
  if (reporter != nullptr) reporter->finalize(result);
  return result;
}

}  // namespace microga
