#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "saea/engine.hpp"
#include "saea/fitness.hpp"
#include "saea/population.hpp"
#include "saea/rate_set.hpp"
#include "saea/selection.hpp"
#include "saea/statistics.hpp"

namespace saea {

/// Level partitions of the extended space used by the runtime analysis.
///
/// leading_ones_levels(ell):
///   -1          (x, chi_high) with LO(x) >= ell
///   0..ell-1    any rate with LO(x) = j
///   ell..n      (x, chi_low) with LO(x) = j
///
/// peak_levels(ell, m), for f_m with m < ell:
///   -1          the peak 0^n with either rate
///   0           LO(x) = 0, x != 0^n
///   1..ell-2    any rate with LO(x) = j
///   ell-1       (x, chi_low) with LO(x) = ell-1, or (y, chi_high) with LO(y) >= ell-1
///   ell..n      (x, chi_low) with LO(x) = j
///
/// chi_high is the last index of the rate set; with a single rate nothing
/// counts as high.
class LevelPartitionSpec {
 public:
  enum class Scheme { leading_ones_levels, peak_levels };

  static LevelPartitionSpec leading_ones_levels(std::size_t n, int ell, std::size_t rate_count);
  static LevelPartitionSpec peak_levels(std::size_t n, int ell, int m, std::size_t rate_count);

  Scheme scheme() const { return scheme_; }
  std::size_t n() const { return n_; }
  int ell() const { return ell_; }
  int m() const { return m_; }
  std::optional<std::uint32_t> high_index() const { return high_index_; }

  bool is_high(const Individual& ind) const { return high_index_ && ind.rate_index == *high_index_; }
  /// Membership in B = {(y, chi_high) | LO(y) >= ell}.
  bool in_b(const Individual& ind) const;

 private:
  LevelPartitionSpec(Scheme scheme, std::size_t n, int ell, int m, std::size_t rate_count);

  Scheme scheme_;
  std::size_t n_;
  int ell_;
  int m_;
  std::optional<std::uint32_t> high_index_;
};

int classify_level(const Individual& ind, const LevelPartitionSpec& spec);

/// Counts per level, index j + 1 holds |P cap A_j| for j in {-1, ..., n}.
std::vector<std::size_t> level_occupancy(const Population& p, const LevelPartitionSpec& spec);

struct GenerationRecord {
  std::uint64_t t = 0;
  int best = 0;
  /// Fitness of the ceil(lambda/10)-th best individual.
  int ranked_q = 0;
  /// Fraction of the population whose rate index is 0 (chi_low).
  double frac_low = 0.0;
  std::optional<std::size_t> count_a_minus1;
  std::optional<std::size_t> count_b;
  /// max_i R(i) of the selections that produced this population.
  std::optional<std::size_t> max_rr;
  /// Sum of R(i); equals lambda whenever max_rr is present.
  std::optional<std::size_t> rr_total;

  friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

/// 1-based rank used for the ranked-individual statistic: ceil(lambda / 10).
std::size_t ranked_position(std::size_t lambda);

GenerationRecord record_generation(std::uint64_t t, const Population& p, std::span<const int> fitness,
                                   const SelectionLedger* ledger, const LevelPartitionSpec* spec);
GenerationRecord record_generation(std::uint64_t t, const Population& p, const SelectionLedger* ledger,
                                   const LevelPartitionSpec* spec, const FitnessFunction& f);

/// Collects one GenerationRecord per generation of a run.
class GenerationRecorder {
 public:
  explicit GenerationRecorder(std::optional<LevelPartitionSpec> spec = std::nullopt) : spec_(std::move(spec)) {}

  RunHooks hooks();
  const std::vector<GenerationRecord>& records() const { return records_; }
  std::vector<GenerationRecord> take() { return std::move(records_); }

 private:
  std::optional<LevelPartitionSpec> spec_;
  std::vector<GenerationRecord> records_;
};

inline constexpr const char* kRecordCsvHeader = "t,best,ranked_q,frac_low,count_Aminus1,count_B,max_rr";
inline constexpr const char* kTrajectoryCsvHeader = "j,min,q1,median,q3,max,count";

/// Writes `comment` lines prefixed by "# ", then the header and one row per
/// record. Absent optional fields are written as empty cells.
void write_records_csv(std::ostream& out, std::span<const GenerationRecord> records,
                       std::span<const std::string> comment = {});

struct TrajectoryBin {
  int j = 0;
  std::optional<Summary> summary;
};

/// Distribution of frac_low per value j of the ranked-individual statistic,
/// pooled over all (run, generation) pairs.
class TrajectoryAggregator {
 public:
  explicit TrajectoryAggregator(std::size_t n) : bins_(n + 1) {}

  void add(std::span<const GenerationRecord> run_records);
  void add(const GenerationRecord& record);

  std::size_t n() const { return bins_.size() - 1; }
  const std::vector<double>& values(int j) const { return bins_.at(static_cast<std::size_t>(j)); }
  /// One entry per j in [0, n]; empty bins carry no summary.
  std::vector<TrajectoryBin> summarize() const;

 private:
  std::vector<std::vector<double>> bins_;
};

std::vector<TrajectoryBin> trajectory_aggregate(std::span<const std::vector<GenerationRecord>> runs, std::size_t n);

void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryBin> bins,
                          std::span<const std::string> comment = {});

/// Shortest decimal text that round-trips the double.
std::string format_double(double value);

}  // namespace saea
