#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "saea/fitness.hpp"
#include "saea/population.hpp"
#include "saea/random.hpp"

namespace saea {

/// k-tournament with replacement; k = 2 is binary tournament.
struct Tournament {
  std::size_t k = 2;
};
/// (mu, lambda)-selection: uniform over the mu best ranks.
struct MuComma {
  std::size_t mu = 1;
};

class SelectionMechanism {
 public:
  using Kind = std::variant<Tournament, MuComma>;

  static SelectionMechanism tournament(std::size_t k);
  static SelectionMechanism mu_comma(std::size_t mu);

  const Kind& kind() const { return kind_; }
  bool is_tournament() const { return std::holds_alternative<Tournament>(kind_); }
  bool is_mu_comma() const { return std::holds_alternative<MuComma>(kind_); }
  /// Checks the mechanism against a population size; throws configuration_error.
  void validate(std::size_t lambda) const;
  /// Upper bound on any individual's reproductive rate: k for tournaments,
  /// lambda / mu for (mu, lambda)-selection.
  double max_reproductive_rate(std::size_t lambda) const;
  const char* name() const;

 private:
  explicit SelectionMechanism(Kind kind) : kind_(kind) {}
  Kind kind_;
};

/// Indices ordered by fitness, best first. Ties are broken uniformly at
/// random: a Fisher-Yates shuffle followed by a stable sort.
std::vector<std::size_t> rank_by_fitness(std::span<const int> fitness, RandomStream& rng);
std::vector<std::size_t> rank_population(const Population& p, const FitnessFunction& f, RandomStream& rng);

/// Per-generation view used by select_parent: cached fitness values plus the
/// ranking when the mechanism needs one.
class SelectionContext {
 public:
  /// Ranks the population with `ranking_rng` if the mechanism requires it.
  SelectionContext(std::span<const int> fitness, const SelectionMechanism& mech, RandomStream& ranking_rng);

  std::size_t lambda() const { return fitness_.size(); }
  std::span<const int> fitness() const { return fitness_; }
  const std::vector<std::size_t>& ranking() const { return ranking_; }
  const SelectionMechanism& mechanism() const { return mech_; }

 private:
  std::span<const int> fitness_;
  SelectionMechanism mech_;
  std::vector<std::size_t> ranking_;
};

/// Samples I_t(i) according to p_sel(P_t).
std::size_t select_parent(const SelectionContext& ctx, RandomStream& rng);
/// Convenience form that evaluates and ranks on every call.
std::size_t select_parent(const Population& p, const SelectionMechanism& mech, const FitnessFunction& f,
                          RandomStream& rng);

/// Tally of how often each individual of P_t was selected during one
/// generation, i.e. R_t(i).
class SelectionLedger {
 public:
  explicit SelectionLedger(std::size_t lambda) : counts_(lambda, 0) {}

  void record(std::size_t index);
  void merge(const SelectionLedger& other);

  std::size_t lambda() const { return counts_.size(); }
  std::size_t total() const { return total_; }
  bool complete() const { return total_ == counts_.size(); }

  /// R_t(.) for a finished generation. Throws state_error unless exactly
  /// lambda selections were recorded.
  const std::vector<std::size_t>& reproductive_rates() const;
  std::size_t max_rate() const;

 private:
  std::vector<std::size_t> counts_;
  std::size_t total_ = 0;
};

inline const std::vector<std::size_t>& reproductive_rates(const SelectionLedger& ledger) {
  return ledger.reproductive_rates();
}

}  // namespace saea
