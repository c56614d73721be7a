#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace saea {

/// Position of a stream in the experiment: which trial, which generation and
/// which offspring slot (or one of the reserved slots below) it belongs to.
struct Lineage {
  std::uint64_t trial = 0;
  std::uint64_t generation = 0;
  std::uint64_t slot = 0;

  friend bool operator==(const Lineage&, const Lineage&) = default;
};

/// Reserved slot numbers. Offspring slots are [0, lambda).
inline constexpr std::uint64_t kRankingSlot = std::numeric_limits<std::uint64_t>::max();
inline constexpr std::uint64_t kSurvivorSlot = kRankingSlot - 1;

/// Deterministic random stream addressed by (master seed, lineage).
///
/// The lineage coordinates are hashed with the SplitMix64 finalizer into a
/// 64-bit key that seeds a xoshiro256** generator. The n-th draw of a stream
/// is therefore a pure function of (master_seed, lineage, n), independent of
/// which thread produces it or in what order streams are created.
///
/// Satisfies UniformRandomBitGenerator, so it can drive <random> distributions,
/// but the samplers below are used throughout the library so that results do
/// not depend on the standard library implementation.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t master_seed, Lineage lineage);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform double in (0, 1].
  double uniform01_open_low();
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound);
  bool bernoulli(double p);
  /// Number of failures before the first success of Bernoulli(p) trials,
  /// saturated at `cap`. p must be in (0, 1].
  std::uint64_t geometric_skip(double p, std::uint64_t cap);

  std::uint64_t master_seed() const { return master_seed_; }
  const Lineage& lineage() const { return lineage_; }
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t master_seed_;
  Lineage lineage_;
  std::uint64_t draws_ = 0;
  std::array<std::uint64_t, 4> state_{};
};

RandomStream spawn_stream(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t generation,
                          std::uint64_t slot);

}  // namespace saea
