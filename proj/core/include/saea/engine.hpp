#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>

#include "saea/fitness.hpp"
#include "saea/mutation.hpp"
#include "saea/population.hpp"
#include "saea/selection.hpp"

namespace saea {

/// Genomes and rates drawn uniformly at random.
struct UniformInit {};
/// Every individual starts at `point`; rates are all `rate_index`, or uniform
/// over M when it is empty.
struct PointInit {
  Genome point;
  std::optional<std::uint32_t> rate_index;
};
using Initializer = std::variant<UniformInit, PointInit>;

struct RunConfig {
  std::size_t n;
  std::size_t lambda;
  SelectionMechanism selection;
  MutationStrategy mutation;
  FitnessFunction fitness;
  Initializer init;
  /// Number of populations P_0, P_1, ... that may be evaluated.
  std::uint64_t max_generations;
  std::uint64_t master_seed;

  /// Throws configuration_error on inconsistent settings.
  void validate() const;
};

/// 100 n^2 evaluations.
std::uint64_t default_budget_evaluations(std::size_t n);
/// Largest generation count whose evaluations fit in `evaluations`.
std::uint64_t generations_for_budget(std::uint64_t evaluations, std::size_t lambda);

struct RunResult {
  bool success = false;
  /// T = t * lambda for the first generation t whose population holds 1^n.
  std::optional<std::uint64_t> hitting_time_evaluations;
  std::uint64_t hitting_generation = 0;
  /// Populations evaluated, including P_0.
  std::uint64_t generations_used = 0;
  std::uint64_t evaluations = 0;
  int best_fitness = 0;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// State handed to instrumentation at each generation barrier. `ledger` holds
/// the selections that produced this population (null for P_0).
struct GenerationView {
  std::uint64_t t;
  const Population& population;
  std::span<const int> fitness;
  const SelectionLedger* ledger;
  const RunConfig& config;
};

struct RunHooks {
  std::function<void(const GenerationView&)> on_generation;
};

Population initial_population(const RunConfig& config, std::size_t size, std::uint64_t trial);

/// Non-elitist generational loop: each of the lambda slots of P_{t+1} is an
/// independent (select, mutate) draw from P_t using stream (trial, t+1, slot).
/// Stops at the first population containing 1^n or when max_generations
/// populations have been evaluated.
RunResult run(const RunConfig& config, std::uint64_t trial = 0, const RunHooks& hooks = {});

/// Minimal (mu+lambda) EA used as an elitist reference: lambda offspring from
/// uniformly chosen parents, next population is the best mu of parents and
/// offspring (random tie-break). mu comes from a MuComma selection in the
/// config, otherwise mu = lambda. The mutation strategy must be fixed.
RunResult run_elitist_baseline(const RunConfig& config, std::uint64_t trial = 0, const RunHooks& hooks = {});

}  // namespace saea
