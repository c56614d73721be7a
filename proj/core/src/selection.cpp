#include "saea/selection.hpp"

#include <algorithm>
#include <numeric>

#include "saea/errors.hpp"

namespace saea {

SelectionMechanism SelectionMechanism::tournament(std::size_t k) {
  if (k < 2) throw configuration_error("tournament size must be at least 2");
  return SelectionMechanism(Tournament{k});
}

SelectionMechanism SelectionMechanism::mu_comma(std::size_t mu) {
  if (mu < 1) throw configuration_error("(mu,lambda)-selection requires mu >= 1");
  return SelectionMechanism(MuComma{mu});
}

void SelectionMechanism::validate(std::size_t lambda) const {
  if (lambda == 0) throw configuration_error("population size must be positive");
  if (const auto* mc = std::get_if<MuComma>(&kind_); mc != nullptr && mc->mu > lambda) {
    throw configuration_error("(mu,lambda)-selection requires mu <= lambda");
  }
}

double SelectionMechanism::max_reproductive_rate(std::size_t lambda) const {
  if (const auto* t = std::get_if<Tournament>(&kind_)) return static_cast<double>(t->k);
  return static_cast<double>(lambda) / static_cast<double>(std::get<MuComma>(kind_).mu);
}

const char* SelectionMechanism::name() const { return is_tournament() ? "tournament" : "mu-comma"; }

std::vector<std::size_t> rank_by_fitness(std::span<const int> fitness, RandomStream& rng) {
  std::vector<std::size_t> order(fitness.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_index(i));
    std::swap(order[i - 1], order[j]);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fitness[a] > fitness[b]; });
  return order;
}

std::vector<std::size_t> rank_population(const Population& p, const FitnessFunction& f, RandomStream& rng) {
  std::vector<int> fitness;
  fitness.reserve(p.lambda());
  for (const auto& ind : p) fitness.push_back(extended_fitness(ind, f));
  return rank_by_fitness(fitness, rng);
}

SelectionContext::SelectionContext(std::span<const int> fitness, const SelectionMechanism& mech,
                                   RandomStream& ranking_rng)
    : fitness_(fitness), mech_(mech) {
  mech_.validate(fitness.size());
  if (mech_.is_mu_comma()) ranking_ = rank_by_fitness(fitness, ranking_rng);
}

std::size_t select_parent(const SelectionContext& ctx, RandomStream& rng) {
  const std::size_t lambda = ctx.lambda();
  if (const auto* mc = std::get_if<MuComma>(&ctx.mechanism().kind())) {
    return ctx.ranking()[rng.uniform_index(mc->mu)];
  }
  const std::size_t k = std::get<Tournament>(ctx.mechanism().kind()).k;
  const auto fitness = ctx.fitness();
  std::size_t winner = static_cast<std::size_t>(rng.uniform_index(lambda));
  // Reservoir sampling over the sampled maxima gives a uniform tie-break.
  std::size_t ties = 1;
  for (std::size_t draw = 1; draw < k; ++draw) {
    const auto candidate = static_cast<std::size_t>(rng.uniform_index(lambda));
    if (fitness[candidate] > fitness[winner]) {
      winner = candidate;
      ties = 1;
    } else if (fitness[candidate] == fitness[winner]) {
      ++ties;
      if (rng.uniform_index(ties) == 0) winner = candidate;
    }
  }
  return winner;
}

std::size_t select_parent(const Population& p, const SelectionMechanism& mech, const FitnessFunction& f,
                          RandomStream& rng) {
  std::vector<int> fitness;
  fitness.reserve(p.lambda());
  for (const auto& ind : p) fitness.push_back(extended_fitness(ind, f));
  const SelectionContext ctx(fitness, mech, rng);
  return select_parent(ctx, rng);
}

void SelectionLedger::record(std::size_t index) {
  if (index >= counts_.size()) throw configuration_error("selection ledger: index out of range");
  if (total_ == counts_.size()) throw state_error("selection ledger already holds lambda selections");
  ++counts_[index];
  ++total_;
}

void SelectionLedger::merge(const SelectionLedger& other) {
  if (other.lambda() != lambda()) throw dimension_error("selection ledger: lambda mismatch on merge");
  if (total_ + other.total_ > counts_.size()) throw state_error("selection ledger: merge exceeds lambda selections");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

const std::vector<std::size_t>& SelectionLedger::reproductive_rates() const {
  if (!complete()) throw state_error("reproductive rates requested before the generation completed");
  return counts_;
}

std::size_t SelectionLedger::max_rate() const {
  const auto& counts = reproductive_rates();
  return *std::max_element(counts.begin(), counts.end());
}

}  // namespace saea
