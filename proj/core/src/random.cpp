#include "saea/random.hpp"

#include <bit>
#include <cmath>

namespace saea {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Absorbs one coordinate into the running key. Each step is a bijection of
// the key for a fixed coordinate, and distinct coordinates are separated by
// the finalizer, so nearby lineages land far apart.
constexpr std::uint64_t absorb(std::uint64_t key, std::uint64_t coordinate) {
  return splitmix_finalize(key ^ splitmix_finalize(coordinate + kGolden));
}

}  // namespace

RandomStream::RandomStream(std::uint64_t master_seed, Lineage lineage) : master_seed_(master_seed), lineage_(lineage) {
  std::uint64_t key = splitmix_finalize(master_seed + kGolden);
  key = absorb(key, lineage.trial);
  key = absorb(key, lineage.generation);
  key = absorb(key, lineage.slot);
  // Standard xoshiro seeding: consecutive SplitMix64 outputs from the key.
  for (auto& word : state_) {
    key += kGolden;
    word = splitmix_finalize(key);
  }
}

RandomStream::result_type RandomStream::operator()() {
  ++draws_;
  const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = std::rotl(state_[3], 45);
  return result;
}

double RandomStream::uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double RandomStream::uniform01_open_low() { return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53; }

std::uint64_t RandomStream::uniform_index(std::uint64_t bound) {
  // Lemire's nearly divisionless method.
  std::uint64_t x = (*this)();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

bool RandomStream::bernoulli(double p) { return uniform01() < p; }

std::uint64_t RandomStream::geometric_skip(double p, std::uint64_t cap) {
  if (p >= 1.0) return 0;
  const double skip = std::floor(std::log(uniform01_open_low()) / std::log1p(-p));
  if (!(skip < static_cast<double>(cap))) return cap;
  return static_cast<std::uint64_t>(skip);
}

RandomStream spawn_stream(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t generation,
                          std::uint64_t slot) {
  return RandomStream(master_seed, Lineage{trial, generation, slot});
}

}  // namespace saea
