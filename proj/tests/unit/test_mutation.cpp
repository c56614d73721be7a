#include <doctest.h>

#include <vector>

#include "saea/errors.hpp"
#include "saea/mutation.hpp"
#include "stat_checks.hpp"

using namespace saea;
using saea::testing::frequency_se;

namespace {

Genome complement(const Genome& x) {
  Genome y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y.flip(i);
  return y;
}

}  // namespace

TEST_CASE("unchanged offspring probability at n = 2, chi = 1") {
  RandomStream rng(1, {0, 0, 0});
  const Genome x = Genome::from_string("10");
  const std::size_t samples = 100000;
  std::size_t same = 0;
  for (std::size_t s = 0; s < samples; ++s) same += bitwise_mutate(x, 1.0, rng) == x;
  const double freq = static_cast<double>(same) / samples;
  CHECK(std::abs(freq - 0.25) <= 3 * frequency_se(0.25, samples));
}

TEST_CASE("chi = n flips every bit") {
  RandomStream rng(2, {0, 0, 0});
  for (std::size_t n : {1u, 5u, 64u, 100u}) {
    Genome x(n);
    for (std::size_t i = 0; i < n; i += 2) x.set(i, true);
    for (int rep = 0; rep < 20; ++rep) CHECK(bitwise_mutate(x, static_cast<double>(n), rng) == complement(x));
  }
}

TEST_CASE("mutation rejects rates outside (0, n]") {
  RandomStream rng(3, {0, 0, 0});
  CHECK_THROWS_AS(bitwise_mutate(Genome(10), 0.0, rng), configuration_error);
  CHECK_THROWS_AS(bitwise_mutate(Genome(10), -1.0, rng), configuration_error);
  CHECK_THROWS_AS(bitwise_mutate(Genome(10), 10.5, rng), configuration_error);
}

TEST_CASE("hamming distance of offspring is Binomial(n, chi/n)") {
  struct Case {
    std::size_t n;
    double chi;
  };
  for (const Case c : {Case{100, 0.4}, Case{100, 2.0}, Case{65, 5.0}, Case{130, 1.0}}) {
    CAPTURE(c.n);
    CAPTURE(c.chi);
    const auto fit = saea::testing::mutation_hamming_fit(c.n, c.chi, 100000, 99 + c.n, 0.001);
    CAPTURE(fit.statistic);
    CAPTURE(fit.critical);
    CHECK(fit.passes);
  }
}

TEST_CASE("every position flips with the same probability") {
  const std::size_t n = 70;
  const double chi = 3.0;
  RandomStream rng(4, {0, 0, 0});
  const Genome x(n);
  std::vector<std::size_t> flips(n, 0);
  const std::size_t samples = 50000;
  for (std::size_t s = 0; s < samples; ++s) {
    const Genome y = bitwise_mutate(x, chi, rng);
    for (std::size_t i = 0; i < n; ++i) flips[i] += y[i];
  }
  std::size_t total = 0;
  for (auto f : flips) total += f;
  CHECK(static_cast<double>(total) / samples == doctest::Approx(chi).epsilon(0.02));
  const auto fit = saea::testing::chi_square_fit(flips, std::vector<double>(n, 1.0 / n), 0.001);
  CHECK(fit.passes);
}

TEST_CASE("in-place mutation matches the copying form") {
  RandomStream a(5, {1, 2, 3});
  RandomStream b(5, {1, 2, 3});
  Genome x = Genome::from_string("1100110011001100110011001100110011001100110011001100110011001100110011");
  for (int rep = 0; rep < 100; ++rep) {
    const Genome y = bitwise_mutate(x, 2.5, a);
    bitwise_mutate_in_place(x, 2.5, b);
    REQUIRE(x == y);
  }
}

TEST_CASE("self-adaptive switch frequency") {
  const auto strategy = MutationStrategy::self_adaptive(RateSet({0.4, 2.0}, 100), 0.05);
  RandomStream rng(6, {0, 0, 0});
  const Individual parent{Genome(100), 1};
  const std::size_t samples = 100000;
  std::size_t switched = 0;
  for (std::size_t s = 0; s < samples; ++s) switched += choose_rate(parent, strategy, rng) != 1;
  const double freq = static_cast<double>(switched) / samples;
  CHECK(freq == doctest::Approx(0.05).epsilon(0.1));
  CHECK(std::abs(freq - 0.05) <= 3 * frequency_se(0.05, samples));
}

TEST_CASE("self-adaptive law over three rates") {
  const auto strategy = MutationStrategy::self_adaptive(RateSet({0.5, 1.0, 2.0}, 50), 0.3);
  RandomStream rng(7, {0, 0, 0});
  const Individual parent{Genome(50), 0};
  std::vector<std::size_t> counts(3, 0);
  const std::size_t samples = 100000;
  for (std::size_t s = 0; s < samples; ++s) ++counts[choose_rate(parent, strategy, rng)];
  CHECK(static_cast<double>(counts[0]) / samples == doctest::Approx(0.70).epsilon(0.01 / 0.70));
  CHECK(static_cast<double>(counts[1]) / samples == doctest::Approx(0.15).epsilon(0.01 / 0.15));
  CHECK(static_cast<double>(counts[2]) / samples == doctest::Approx(0.15).epsilon(0.01 / 0.15));
}

TEST_CASE("p = 0 never switches") {
  const auto strategy = MutationStrategy::self_adaptive_unchecked(RateSet({0.5, 2.0}, 20), 0.0);
  RandomStream rng(8, {0, 0, 0});
  for (std::uint32_t r = 0; r < 2; ++r) {
    const Individual parent{Genome(20), r};
    for (int s = 0; s < 10000; ++s) REQUIRE(choose_rate(parent, strategy, rng) == r);
  }
}

TEST_CASE("genome is mutated with the new rate, not the inherited one") {
  // M = {tiny, n}: the high rate flips every bit, the tiny one almost never.
  const std::size_t n = 40;
  const auto strategy = MutationStrategy::self_adaptive(RateSet({1e-6, 40.0}, n), 0.5);
  RandomStream rng(9, {0, 0, 0});
  const Individual parent{Genome::from_string("1111000011110000111100001111000011110000"), 0};
  std::size_t high = 0;
  for (int s = 0; s < 20000; ++s) {
    const Individual child = apply_strategy(parent, strategy, rng);
    if (child.rate_index == 1) {
      ++high;
      REQUIRE(child.genome == complement(parent.genome));
    } else {
      REQUIRE(child.genome == parent.genome);
    }
  }
  CHECK(high > 9000);
  CHECK(high < 11000);
}

TEST_CASE("uniform mixing ignores the parent rate") {
  const auto strategy = MutationStrategy::uniform_mix(RateSet({0.5, 1.0, 2.0}, 10));
  RandomStream rng(10, {0, 0, 0});
  std::vector<std::size_t> counts(3, 0);
  const Individual parent{Genome(10), 2};
  for (int s = 0; s < 30000; ++s) ++counts[choose_rate(parent, strategy, rng)];
  for (auto c : counts) CHECK(std::abs(static_cast<double>(c) - 10000.0) < 3 * std::sqrt(30000 * (1.0 / 3) * (2.0 / 3)));
  const auto single = MutationStrategy::uniform_mix(RateSet({1.0}, 10));
  CHECK(choose_rate(parent, single, rng) == 0);
}

TEST_CASE("fixed strategy always uses its index") {
  const auto strategy = MutationStrategy::fixed(RateSet({0.5, 1.0}, 10), 1);
  RandomStream rng(11, {0, 0, 0});
  for (std::uint32_t r = 0; r < 2; ++r) CHECK(choose_rate({Genome(10), r}, strategy, rng) == 1);
  CHECK_THROWS_AS(MutationStrategy::fixed(RateSet({0.5, 1.0}, 10), 2), configuration_error);
}

TEST_CASE("strategy parameter validation and names") {
  const RateSet m({0.5, 1.0}, 10);
  CHECK_THROWS_AS(MutationStrategy::self_adaptive(m, 0.0), configuration_error);
  CHECK_THROWS_AS(MutationStrategy::self_adaptive(m, 0.6), configuration_error);
  CHECK_NOTHROW(MutationStrategy::self_adaptive(m, 0.5));
  CHECK_THROWS_AS(MutationStrategy::self_adaptive_unchecked(m, 1.5), configuration_error);
  CHECK(std::string(MutationStrategy::fixed(m, 0).name()) == "fixed");
  CHECK(std::string(MutationStrategy::uniform_mix(m).name()) == "mix");
  CHECK(std::string(MutationStrategy::self_adaptive(m, 0.1).name()) == "adapt");
}

TEST_CASE("self-adaptation with a single rate keeps it") {
  const auto strategy = MutationStrategy::self_adaptive(RateSet({1.0}, 10), 0.5);
  RandomStream rng(12, {0, 0, 0});
  for (int s = 0; s < 1000; ++s) REQUIRE(choose_rate({Genome(10), 0}, strategy, rng) == 0);
}
