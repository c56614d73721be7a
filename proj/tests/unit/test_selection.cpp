#include <doctest.h>

#include <map>
#include <numeric>
#include <vector>

#include "saea/errors.hpp"
#include "saea/selection.hpp"
#include "saea/theory.hpp"
#include "stat_checks.hpp"

using namespace saea;
using saea::testing::frequency_se;

namespace {

/// Fraction of draws that pick one of the first `fit` indices when they are
/// strictly fitter than the remaining ones.
double tournament_top_frequency(std::size_t lambda, std::size_t fit, std::size_t samples, std::uint64_t seed) {
  std::vector<int> fitness(lambda, 0);
  for (std::size_t i = 0; i < fit; ++i) fitness[i] = 1;
  RandomStream ranking(seed, {0, 0, kRankingSlot});
  const SelectionContext ctx(fitness, SelectionMechanism::tournament(2), ranking);
  RandomStream rng(seed, {0, 0, 0});
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) hits += select_parent(ctx, rng) < fit;
  return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace

TEST_CASE("rank by fitness examples") {
  RandomStream rng(1, {0, 0, 0});
  const std::vector<int> f{5, 3, 9};
  CHECK(rank_by_fitness(f, rng) == std::vector<std::size_t>{2, 0, 1});
  const std::vector<int> single{4};
  CHECK(rank_by_fitness(single, rng) == std::vector<std::size_t>{0});
}

TEST_CASE("ranking is a permutation sorted by fitness") {
  RandomStream rng(2, {0, 0, 0});
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t lambda = 1 + rng.uniform_index(60);
    std::vector<int> f(lambda);
    for (auto& v : f) v = static_cast<int>(rng.uniform_index(5));
    const auto order = rank_by_fitness(f, rng);
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> iota(lambda);
    std::iota(iota.begin(), iota.end(), 0);
    REQUIRE(sorted == iota);
    for (std::size_t i = 1; i < lambda; ++i) REQUIRE(f[order[i - 1]] >= f[order[i]]);
  }
}

TEST_CASE("ties are broken uniformly") {
  RandomStream rng(3, {0, 0, 0});
  const std::vector<int> f{7, 7, 7};
  std::map<std::vector<std::size_t>, int> seen;
  const int reps = 10000;
  for (int r = 0; r < reps; ++r) ++seen[rank_by_fitness(f, rng)];
  CHECK(seen.size() == 6);
  for (const auto& [order, count] : seen) CHECK(std::abs(count / static_cast<double>(reps) - 1.0 / 6) <= 0.02);
}

TEST_CASE("binary tournament matches beta(gamma)") {
  const std::size_t lambda = 100;
  const std::size_t samples = 100000;
  for (double gamma : {0.1, 0.25, 0.5, 1.0}) {
    CAPTURE(gamma);
    const auto fit = static_cast<std::size_t>(gamma * lambda);
    const double expected = theory::beta(gamma);
    const double freq = tournament_top_frequency(lambda, fit, samples, 10 + fit);
    CHECK(std::abs(freq - expected) <= std::max(3 * frequency_se(expected, samples), 1e-12));
    CHECK(std::abs(freq - expected) <= 0.005);
  }
  CHECK(theory::beta(0.5) == 0.75);
}

TEST_CASE("tournament on a single individual") {
  RandomStream rng(4, {0, 0, 0});
  const std::vector<int> f{1};
  RandomStream ranking(4, {0, 0, kRankingSlot});
  const SelectionContext ctx(f, SelectionMechanism::tournament(2), ranking);
  for (int s = 0; s < 100; ++s) REQUIRE(select_parent(ctx, rng) == 0);
}

TEST_CASE("tournament picks uniformly among equally fit winners") {
  const std::vector<int> f{3, 3, 1, 0};
  RandomStream ranking(5, {0, 0, kRankingSlot});
  const SelectionContext ctx(f, SelectionMechanism::tournament(3), ranking);
  RandomStream rng(5, {0, 0, 0});
  std::vector<std::size_t> counts(4, 0);
  for (int s = 0; s < 40000; ++s) ++counts[select_parent(ctx, rng)];
  CHECK(std::abs(static_cast<double>(counts[0]) - static_cast<double>(counts[1])) < 600);
  // Index 3 only wins when all three draws are index 3.
  CHECK(counts[3] == doctest::Approx(40000.0 / 64).epsilon(0.2));
}

TEST_CASE("(mu, lambda) with mu = lambda is uniform") {
  // Goodness of fit on 100 independent generations; a correct sampler
  // rejects at the 1% level in about one of them.
  const std::size_t lambda = 8;
  std::vector<int> f(lambda);
  for (std::size_t i = 0; i < lambda; ++i) f[i] = static_cast<int>(i % 3);
  const std::vector<double> probs(lambda, 1.0 / lambda);
  int rejections = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    RandomStream ranking(6, {0, t, kRankingSlot});
    const SelectionContext ctx(f, SelectionMechanism::mu_comma(lambda), ranking);
    RandomStream rng(6, {0, t, 0});
    std::vector<std::size_t> counts(lambda, 0);
    for (int s = 0; s < 8000; ++s) ++counts[select_parent(ctx, rng)];
    rejections += !saea::testing::chi_square_fit(counts, probs, 0.01).passes;
  }
  CHECK(rejections <= 5);
}

TEST_CASE("(mu, lambda) only selects the mu best") {
  const std::vector<int> f{0, 9, 4, 8, 1, 7};
  RandomStream ranking(7, {0, 0, kRankingSlot});
  const SelectionContext ctx(f, SelectionMechanism::mu_comma(3), ranking);
  RandomStream rng(7, {0, 0, 0});
  for (int s = 0; s < 1000; ++s) {
    const auto i = select_parent(ctx, rng);
    REQUIRE((i == 1 || i == 3 || i == 5));
  }
}

TEST_CASE("ledger tally example") {
  SelectionLedger ledger(4);
  for (std::size_t i : {0, 0, 1, 3}) ledger.record(i);
  CHECK(ledger.complete());
  CHECK(reproductive_rates(ledger) == std::vector<std::size_t>{2, 1, 0, 1});
  CHECK(ledger.max_rate() == 2);
  CHECK_THROWS_AS(ledger.record(0), state_error);
}

TEST_CASE("ledger refuses to report mid-generation") {
  SelectionLedger ledger(4);
  ledger.record(1);
  CHECK_FALSE(ledger.complete());
  CHECK_THROWS_AS(ledger.reproductive_rates(), state_error);
  SelectionLedger other(4);
  for (std::size_t i : {2, 2, 3}) other.record(i);
  ledger.merge(other);
  CHECK(ledger.complete());
  CHECK(ledger.reproductive_rates() == std::vector<std::size_t>{0, 1, 2, 1});
}

TEST_CASE("mean reproductive rate of a top-mu individual is lambda / mu") {
  const std::size_t lambda = 40;
  const std::size_t mu = 10;
  std::vector<int> f(lambda);
  std::iota(f.begin(), f.end(), 0);
  const auto mech = SelectionMechanism::mu_comma(mu);
  double total = 0.0;
  const int generations = 2000;
  for (int t = 0; t < generations; ++t) {
    RandomStream ranking(8, {0, static_cast<std::uint64_t>(t), kRankingSlot});
    const SelectionContext ctx(f, mech, ranking);
    SelectionLedger ledger(lambda);
    for (std::size_t slot = 0; slot < lambda; ++slot) {
      RandomStream rng(8, {0, static_cast<std::uint64_t>(t), slot});
      ledger.record(select_parent(ctx, rng));
    }
    total += static_cast<double>(ledger.reproductive_rates()[lambda - 1]);  // the fittest
  }
  CHECK(total / generations == doctest::Approx(static_cast<double>(lambda) / mu).epsilon(0.05));
  CHECK(mech.max_reproductive_rate(lambda) == 4.0);
}

TEST_CASE("binary tournament gives the unique best at most rate 2") {
  const std::size_t lambda = 50;
  std::vector<int> f(lambda, 0);
  f[17] = 1;
  const auto mech = SelectionMechanism::tournament(2);
  std::vector<double> rates;
  for (int t = 0; t < 3000; ++t) {
    RandomStream ranking(9, {0, static_cast<std::uint64_t>(t), kRankingSlot});
    const SelectionContext ctx(f, mech, ranking);
    SelectionLedger ledger(lambda);
    for (std::size_t slot = 0; slot < lambda; ++slot) {
      RandomStream rng(9, {0, static_cast<std::uint64_t>(t), slot});
      ledger.record(select_parent(ctx, rng));
    }
    REQUIRE(std::accumulate(ledger.reproductive_rates().begin(), ledger.reproductive_rates().end(), std::size_t{0}) ==
            lambda);
    rates.push_back(static_cast<double>(ledger.reproductive_rates()[17]));
  }
  const double mean = std::accumulate(rates.begin(), rates.end(), 0.0) / rates.size();
  double var = 0.0;
  for (double r : rates) var += (r - mean) * (r - mean);
  const double se = std::sqrt(var / (rates.size() - 1) / rates.size());
  CHECK(mean <= 2.0 + 3 * se);
  CHECK(mean == doctest::Approx(2.0 - 1.0 / lambda).epsilon(0.05));
}

TEST_CASE("selection mechanism validation") {
  CHECK_THROWS_AS(SelectionMechanism::tournament(1), configuration_error);
  CHECK_THROWS_AS(SelectionMechanism::mu_comma(0), configuration_error);
  CHECK_THROWS_AS(SelectionMechanism::mu_comma(11).validate(10), configuration_error);
  CHECK_NOTHROW(SelectionMechanism::mu_comma(10).validate(10));
  CHECK(SelectionMechanism::tournament(3).max_reproductive_rate(100) == 3.0);
}

TEST_CASE("convenience select_parent agrees with the context form") {
  std::vector<Individual> members;
  for (const char* bits : {"1100", "1110", "0000", "1000"}) members.push_back({Genome::from_string(bits), 0});
  const Population p(members);
  const auto f = FitnessFunction::leading_ones(4);
  const auto mech = SelectionMechanism::mu_comma(1);
  RandomStream rng(10, {0, 0, 0});
  for (int s = 0; s < 100; ++s) REQUIRE(select_parent(p, mech, f, rng) == 1);
  const auto order = rank_population(p, f, rng);
  CHECK(order.front() == 1);
  CHECK(order.back() == 2);
}
