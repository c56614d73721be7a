#include "saea/engine.hpp"

#include <algorithm>
#include <vector>

#include "saea/errors.hpp"

namespace saea {

void RunConfig::validate() const {
  if (n == 0) throw configuration_error("n must be positive");
  if (lambda == 0) throw configuration_error("lambda must be positive");
  if (max_generations == 0) throw configuration_error("budget must allow at least one generation");
  if (fitness.n() != n) throw configuration_error("fitness function length differs from n");
  if (mutation.rates().genome_length() != n) throw configuration_error("rate set length differs from n");
  selection.validate(lambda);
  if (const auto* point = std::get_if<PointInit>(&init)) {
    if (point->point.size() != n) throw configuration_error("initial point has the wrong length");
    if (point->rate_index && !mutation.rates().valid_index(*point->rate_index)) {
      throw configuration_error("initial rate index out of range");
    }
  }
}

std::uint64_t default_budget_evaluations(std::size_t n) { return 100ULL * n * n; }

std::uint64_t generations_for_budget(std::uint64_t evaluations, std::size_t lambda) {
  if (lambda == 0) throw configuration_error("lambda must be positive");
  return evaluations / lambda;
}

Population initial_population(const RunConfig& config, std::size_t size, std::uint64_t trial) {
  const std::size_t rates = config.mutation.rates().size();
  std::vector<Individual> members(size);
  for (std::size_t i = 0; i < size; ++i) {
    auto rng = spawn_stream(config.master_seed, trial, 0, i);
    Individual& ind = members[i];
    if (const auto* point = std::get_if<PointInit>(&config.init)) {
      ind.genome = point->point;
      ind.rate_index = point->rate_index ? *point->rate_index : static_cast<std::uint32_t>(rng.uniform_index(rates));
    } else {
      ind.genome = Genome(config.n);
      auto words = ind.genome.words();
      for (auto& w : words) w = rng();
      if (const std::size_t tail = config.n % Genome::kWordBits; tail != 0) {
        words.back() &= (Genome::word_type{1} << tail) - 1;
      }
      ind.rate_index = static_cast<std::uint32_t>(rng.uniform_index(rates));
    }
  }
  return Population(std::move(members));
}

namespace {

void evaluate(const Population& p, const FitnessFunction& f, std::vector<int>& fitness) {
  fitness.resize(p.lambda());
  for (std::size_t i = 0; i < p.lambda(); ++i) fitness[i] = extended_fitness(p[i], f);
}

// Returns true when the population holds the optimum and fills the result.
// T counts offspring evaluations: t * lambda.
bool check_optimum(const Population& p, const std::vector<int>& fitness, const FitnessFunction& f, std::uint64_t t,
                   std::size_t lambda, RunResult& result) {
  result.best_fitness = std::max(result.best_fitness, *std::max_element(fitness.begin(), fitness.end()));
  for (std::size_t i = 0; i < p.lambda(); ++i) {
    if (fitness[i] == f.optimum_value() && f.is_optimum(p[i].genome)) {
      result.success = true;
      result.hitting_generation = t;
      result.hitting_time_evaluations = t * lambda;
      return true;
    }
  }
  return false;
}

}  // namespace

RunResult run(const RunConfig& config, std::uint64_t trial, const RunHooks& hooks) {
  config.validate();
  const std::size_t lambda = config.lambda;
  Population current = initial_population(config, lambda, trial);
  Population next = current;
  std::vector<int> fitness;
  SelectionLedger ledger(lambda);
  bool have_ledger = false;

  RunResult result;
  for (std::uint64_t t = 0;; ++t) {
    evaluate(current, config.fitness, fitness);
    ++result.generations_used;
    result.evaluations += lambda;
    if (hooks.on_generation) {
      hooks.on_generation(GenerationView{t, current, fitness, have_ledger ? &ledger : nullptr, config});
    }
    if (check_optimum(current, fitness, config.fitness, t, lambda, result)) break;
    if (result.generations_used >= config.max_generations) break;

    auto ranking_rng = spawn_stream(config.master_seed, trial, t, kRankingSlot);
    const SelectionContext ctx(fitness, config.selection, ranking_rng);
    ledger = SelectionLedger(lambda);
    for (std::size_t slot = 0; slot < lambda; ++slot) {
      auto rng = spawn_stream(config.master_seed, trial, t + 1, slot);
      const std::size_t parent = select_parent(ctx, rng);
      ledger.record(parent);
      apply_strategy_into(current[parent], config.mutation, rng, next[slot]);
    }
    have_ledger = true;
    std::swap(current, next);
  }
  return result;
}

RunResult run_elitist_baseline(const RunConfig& config, std::uint64_t trial, const RunHooks& hooks) {
  config.validate();
  if (!config.mutation.is_fixed()) throw configuration_error("elitist baseline requires a fixed mutation rate");
  const std::size_t lambda = config.lambda;
  const std::size_t mu = config.selection.is_mu_comma() ? std::get<MuComma>(config.selection.kind()).mu : lambda;

  Population parents = initial_population(config, mu, trial);
  std::vector<int> parent_fitness;
  evaluate(parents, config.fitness, parent_fitness);

  RunResult result;
  ++result.generations_used;
  result.evaluations += mu;
  if (hooks.on_generation) hooks.on_generation(GenerationView{0, parents, parent_fitness, nullptr, config});
  if (check_optimum(parents, parent_fitness, config.fitness, 0, lambda, result)) return result;

  std::vector<Individual> pool(mu + lambda);
  std::vector<int> pool_fitness(mu + lambda);
  for (std::uint64_t t = 1; result.generations_used < config.max_generations; ++t) {
    for (std::size_t i = 0; i < mu; ++i) {
      pool[i] = parents[i];
      pool_fitness[i] = parent_fitness[i];
    }
    for (std::size_t slot = 0; slot < lambda; ++slot) {
      auto rng = spawn_stream(config.master_seed, trial, t, slot);
      const auto parent = static_cast<std::size_t>(rng.uniform_index(mu));
      apply_strategy_into(parents[parent], config.mutation, rng, pool[mu + slot]);
      pool_fitness[mu + slot] = extended_fitness(pool[mu + slot], config.fitness);
    }
    ++result.generations_used;
    result.evaluations += lambda;

    auto survivor_rng = spawn_stream(config.master_seed, trial, t, kSurvivorSlot);
    const auto order = rank_by_fitness(pool_fitness, survivor_rng);
    for (std::size_t i = 0; i < mu; ++i) {
      parents[i] = pool[order[i]];
      parent_fitness[i] = pool_fitness[order[i]];
    }
    if (hooks.on_generation) hooks.on_generation(GenerationView{t, parents, parent_fitness, nullptr, config});
    if (check_optimum(parents, parent_fitness, config.fitness, t, lambda, result)) break;
  }
  return result;
}

}  // namespace saea
