#include "saea/mutation.hpp"

#include <cmath>

#include "saea/errors.hpp"

namespace saea {

void bitwise_mutate_in_place(Genome& x, double chi, RandomStream& rng) {
  const std::size_t n = x.size();
  if (!(chi > 0.0) || chi > static_cast<double>(n)) throw configuration_error("bitwise mutation requires 0 < chi <= n");
  if (chi == static_cast<double>(n)) {
    for (std::size_t i = 0; i < n; ++i) x.flip(i);
    return;
  }
  const double q = chi / static_cast<double>(n);
  std::size_t position = 0;
  while (true) {
    position += rng.geometric_skip(q, n - position);
    if (position >= n) break;
    x.flip(position);
    ++position;
  }
}

Genome bitwise_mutate(const Genome& x, double chi, RandomStream& rng) {
  Genome y = x;
  bitwise_mutate_in_place(y, chi, rng);
  return y;
}

MutationStrategy MutationStrategy::fixed(RateSet rates, std::size_t rate_index) {
  if (!rates.valid_index(rate_index)) throw configuration_error("fixed strategy: rate index out of range");
  return {FixedRate{rate_index}, std::move(rates)};
}

MutationStrategy MutationStrategy::uniform_mix(RateSet rates) { return {UniformMix{}, std::move(rates)}; }

MutationStrategy MutationStrategy::self_adaptive(RateSet rates, double p) {
  if (!(p > 0.0 && p <= 0.5)) throw configuration_error("self-adaptation requires 0 < p <= 1/2");
  return {SelfAdaptive{p}, std::move(rates)};
}

MutationStrategy MutationStrategy::self_adaptive_unchecked(RateSet rates, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw configuration_error("self-adaptation requires p in [0, 1]");
  return {SelfAdaptive{p}, std::move(rates)};
}

const char* MutationStrategy::name() const {
  if (is_fixed()) return "fixed";
  if (is_uniform_mix()) return "mix";
  return "adapt";
}

std::size_t choose_rate(const Individual& parent, const MutationStrategy& strategy, RandomStream& rng) {
  const std::size_t rates = strategy.rates().size();
  return std::visit(
      [&](const auto& kind) -> std::size_t {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, FixedRate>) {
          return kind.rate_index;
        } else if constexpr (std::is_same_v<K, UniformMix>) {
          return rates == 1 ? 0 : static_cast<std::size_t>(rng.uniform_index(rates));
        } else {
          const std::size_t current = parent.rate_index;
          if (current >= rates) throw configuration_error("self-adaptation: parent rate index out of range");
          if (rates == 1 || !rng.bernoulli(kind.p)) return current;
          // Uniform over M \ {chi}: draw from the remaining |M| - 1 indices.
          const auto other = static_cast<std::size_t>(rng.uniform_index(rates - 1));
          return other >= current ? other + 1 : other;
        }
      },
      strategy.kind());
}

void apply_strategy_into(const Individual& parent, const MutationStrategy& strategy, RandomStream& rng,
                         Individual& child) {
  const std::size_t index = choose_rate(parent, strategy, rng);
  child.genome = parent.genome;
  child.rate_index = static_cast<std::uint32_t>(index);
  bitwise_mutate_in_place(child.genome, strategy.rates().chi(index), rng);
}

Individual apply_strategy(const Individual& parent, const MutationStrategy& strategy, RandomStream& rng) {
  Individual child;
  apply_strategy_into(parent, strategy, rng, child);
  return child;
}

}  // namespace saea
