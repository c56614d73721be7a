#pragma once

#include <cstddef>
#include <variant>

#include "saea/genome.hpp"
#include "saea/population.hpp"
#include "saea/random.hpp"
#include "saea/rate_set.hpp"

namespace saea {

/// Standard bitwise mutation: every bit flips independently with probability
/// chi / n. Requires 0 < chi <= n, otherwise configuration_error.
///
/// Flip positions are generated by geometric skipping: the gap to the next
/// flipped position is Geometric(chi / n), drawn by inversion from one
/// uniform. This realises the product law exactly and costs O(1 + #flips)
/// draws. chi == n flips every bit without drawing.
Genome bitwise_mutate(const Genome& x, double chi, RandomStream& rng);
/// In-place variant used by the engine to avoid reallocating genomes.
void bitwise_mutate_in_place(Genome& x, double chi, RandomStream& rng);

struct FixedRate {
  std::size_t rate_index = 0;
};
struct UniformMix {};
struct SelfAdaptive {
  double p = 0.05;
};

/// Rate-control strategy over a rate set M.
class MutationStrategy {
 public:
  using Kind = std::variant<FixedRate, UniformMix, SelfAdaptive>;

  static MutationStrategy fixed(RateSet rates, std::size_t rate_index);
  static MutationStrategy uniform_mix(RateSet rates);
  /// Requires 0 < p <= 1/2. With |M| = 1 this behaves as fixed(0).
  static MutationStrategy self_adaptive(RateSet rates, double p);
  /// Same as self_adaptive but also admits p = 0 (never switch); used to
  /// probe the degenerate limit.
  static MutationStrategy self_adaptive_unchecked(RateSet rates, double p);

  const Kind& kind() const { return kind_; }
  const RateSet& rates() const { return rates_; }
  bool is_fixed() const { return std::holds_alternative<FixedRate>(kind_); }
  bool is_uniform_mix() const { return std::holds_alternative<UniformMix>(kind_); }
  bool is_self_adaptive() const { return std::holds_alternative<SelfAdaptive>(kind_); }
  /// Short name used in configuration files: fixed, mix or adapt.
  const char* name() const;

 private:
  MutationStrategy(Kind kind, RateSet rates) : kind_(kind), rates_(std::move(rates)) {}

  Kind kind_;
  RateSet rates_;
};

/// Picks the rate chi' for one offspring of `parent` according to the strategy.
std::size_t choose_rate(const Individual& parent, const MutationStrategy& strategy, RandomStream& rng);

/// p_mut: chooses chi' with choose_rate, then mutates the genome with chi'.
Individual apply_strategy(const Individual& parent, const MutationStrategy& strategy, RandomStream& rng);
/// Writes the offspring into `child`, reusing its storage.
void apply_strategy_into(const Individual& parent, const MutationStrategy& strategy, RandomStream& rng,
                         Individual& child);

}  // namespace saea
