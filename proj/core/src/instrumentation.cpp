#include "saea/instrumentation.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "saea/errors.hpp"

namespace saea {

LevelPartitionSpec::LevelPartitionSpec(Scheme scheme, std::size_t n, int ell, int m, std::size_t rate_count)
    : scheme_(scheme), n_(n), ell_(ell), m_(m) {
  if (ell < 1 || static_cast<std::size_t>(ell) > n) throw configuration_error("level partition requires 1 <= ell <= n");
  if (scheme == Scheme::peak_levels && !(m >= 1 && m < ell)) {
    throw configuration_error("peak level partition requires 1 <= m < ell");
  }
  if (rate_count >= 2) high_index_ = static_cast<std::uint32_t>(rate_count - 1);
}

LevelPartitionSpec LevelPartitionSpec::leading_ones_levels(std::size_t n, int ell, std::size_t rate_count) {
  return {Scheme::leading_ones_levels, n, ell, 0, rate_count};
}

LevelPartitionSpec LevelPartitionSpec::peak_levels(std::size_t n, int ell, int m, std::size_t rate_count) {
  return {Scheme::peak_levels, n, ell, m, rate_count};
}

bool LevelPartitionSpec::in_b(const Individual& ind) const {
  return is_high(ind) && static_cast<int>(ind.genome.leading_ones()) >= ell_;
}

int classify_level(const Individual& ind, const LevelPartitionSpec& spec) {
  const int lo = static_cast<int>(ind.genome.leading_ones());
  const int ell = spec.ell();
  const bool high = spec.is_high(ind);
  if (spec.scheme() == LevelPartitionSpec::Scheme::leading_ones_levels) {
    if (lo >= ell && high) return -1;
    return lo;
  }
  if (ind.genome.all_zero()) return -1;
  if (lo <= ell - 2) return lo;
  if (high) return ell - 1;
  return lo;
}

std::vector<std::size_t> level_occupancy(const Population& p, const LevelPartitionSpec& spec) {
  std::vector<std::size_t> counts(spec.n() + 2, 0);
  for (const auto& ind : p) ++counts[static_cast<std::size_t>(classify_level(ind, spec) + 1)];
  return counts;
}

std::size_t ranked_position(std::size_t lambda) { return (lambda + 9) / 10; }

GenerationRecord record_generation(std::uint64_t t, const Population& p, std::span<const int> fitness,
                                   const SelectionLedger* ledger, const LevelPartitionSpec* spec) {
  if (fitness.size() != p.lambda()) throw dimension_error("record_generation: fitness cache size differs from lambda");
  GenerationRecord r;
  r.t = t;
  std::vector<int> sorted(fitness.begin(), fitness.end());
  const std::size_t k = ranked_position(sorted.size()) - 1;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k), sorted.end(), std::greater<>());
  r.ranked_q = sorted[k];
  r.best = *std::max_element(fitness.begin(), fitness.end());

  std::size_t low = 0;
  for (const auto& ind : p) low += ind.rate_index == 0 ? 1 : 0;
  r.frac_low = static_cast<double>(low) / static_cast<double>(p.lambda());

  if (spec != nullptr) {
    std::size_t a_minus1 = 0;
    std::size_t b = 0;
    for (const auto& ind : p) {
      if (classify_level(ind, *spec) == -1) ++a_minus1;
      if (spec->in_b(ind)) ++b;
    }
    r.count_a_minus1 = a_minus1;
    if (spec->scheme() == LevelPartitionSpec::Scheme::peak_levels) r.count_b = b;
  }
  if (ledger != nullptr) {
    const auto& rates = ledger->reproductive_rates();
    r.max_rr = *std::max_element(rates.begin(), rates.end());
    std::size_t total = 0;
    for (std::size_t c : rates) total += c;
    r.rr_total = total;
  }
  return r;
}

GenerationRecord record_generation(std::uint64_t t, const Population& p, const SelectionLedger* ledger,
                                   const LevelPartitionSpec* spec, const FitnessFunction& f) {
  std::vector<int> fitness;
  fitness.reserve(p.lambda());
  for (const auto& ind : p) fitness.push_back(extended_fitness(ind, f));
  return record_generation(t, p, fitness, ledger, spec);
}

RunHooks GenerationRecorder::hooks() {
  return RunHooks{[this](const GenerationView& view) {
    records_.push_back(record_generation(view.t, view.population, view.fitness, view.ledger,
                                         spec_ ? &*spec_ : nullptr));
  }};
}

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

namespace {

void write_comment(std::ostream& out, std::span<const std::string> comment) {
  for (const auto& line : comment) out << "# " << line << '\n';
}

template <typename T>
void write_optional(std::ostream& out, const std::optional<T>& value) {
  if (value) out << *value;
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const GenerationRecord> records,
                       std::span<const std::string> comment) {
  write_comment(out, comment);
  out << kRecordCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.t << ',' << r.best << ',' << r.ranked_q << ',' << format_double(r.frac_low) << ',';
    write_optional(out, r.count_a_minus1);
    out << ',';
    write_optional(out, r.count_b);
    out << ',';
    write_optional(out, r.max_rr);
    out << '\n';
  }
}

void TrajectoryAggregator::add(const GenerationRecord& record) {
  if (record.ranked_q < 0 || static_cast<std::size_t>(record.ranked_q) >= bins_.size()) {
    throw dimension_error("trajectory: ranked fitness outside [0, n]");
  }
  bins_[static_cast<std::size_t>(record.ranked_q)].push_back(record.frac_low);
}

void TrajectoryAggregator::add(std::span<const GenerationRecord> run_records) {
  for (const auto& r : run_records) add(r);
}

std::vector<TrajectoryBin> TrajectoryAggregator::summarize() const {
  std::vector<TrajectoryBin> out;
  out.reserve(bins_.size());
  for (std::size_t j = 0; j < bins_.size(); ++j) out.push_back({static_cast<int>(j), saea::summarize(bins_[j])});
  return out;
}

std::vector<TrajectoryBin> trajectory_aggregate(std::span<const std::vector<GenerationRecord>> runs, std::size_t n) {
  TrajectoryAggregator agg(n);
  for (const auto& run : runs) agg.add(run);
  return agg.summarize();
}

void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryBin> bins, std::span<const std::string> comment) {
  write_comment(out, comment);
  out << kTrajectoryCsvHeader << '\n';
  for (const auto& bin : bins) {
    out << bin.j << ',';
    if (bin.summary) {
      const auto& s = *bin.summary;
      out << format_double(s.min) << ',' << format_double(s.q1) << ',' << format_double(s.median) << ','
          << format_double(s.q3) << ',' << format_double(s.max) << ',' << s.count;
    } else {
      out << ",,,,,0";
    }
    out << '\n';
  }
}

}  // namespace saea
