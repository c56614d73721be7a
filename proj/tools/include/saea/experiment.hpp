#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "saea/engine.hpp"
#include "saea/instrumentation.hpp"

namespace saea::experiment {

/// Bad command line, unknown preset or malformed setting.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output directory or file could not be written or read.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat key=value configuration. Keys:
///   n lambda selection(tournament|mu-comma) k mu
///   strategy(fixed|mix|adapt) rates(comma list) rate_index p
///   fitness(leading-ones|one-max|peaked) m(int|auto)
///   init(uniform|zeros|ones|<bitstring>) init_rate(uniform|<index>)
///   budget_evals trials seed workers out records(true|false) epsilon
///   elitist_mu elitist_rate_index (separation only)
using Settings = std::map<std::string, std::string>;

std::vector<std::string> preset_names();
/// Throws usage_error for an unknown name.
Settings preset(const std::string& name);

/// Parses "key = value" lines; '#' starts a comment. Throws usage_error.
Settings parse_settings(std::istream& in);
Settings load_settings_file(const std::filesystem::path& path);
/// Applies `overrides` on top of `base`.
Settings merge(Settings base, const Settings& overrides);

struct ExperimentSpec {
  explicit ExperimentSpec(RunConfig config) : run(std::move(config)) {}

  /// Every key after defaults were filled in.
  Settings settings;
  RunConfig run;
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::filesystem::path out;
  bool records = true;
  std::optional<LevelPartitionSpec> levels;
  std::size_t elitist_mu = 0;
  std::size_t elitist_rate_index = 0;
};

/// Fills defaults, validates and builds the run configuration. Throws
/// usage_error (or configuration_error from the core library).
ExperimentSpec resolve(const Settings& settings);

/// Lines embedded as "# " comments in every CSV: the resolved configuration
/// minus keys that do not influence results (out, workers).
std::vector<std::string> describe(const ExperimentSpec& spec);

struct TrialOutcome {
  RunResult result;
  std::vector<GenerationRecord> records;
};

enum class Algorithm { non_elitist, elitist_baseline };

/// Runs trials 0..trials-1 on `spec.workers` threads. Trial i uses lineage
/// coordinate i under the master seed, so the outcome does not depend on
/// the number of workers.
std::vector<TrialOutcome> run_batch(const ExperimentSpec& spec, bool keep_records,
                                    Algorithm algorithm = Algorithm::non_elitist);

/// Success count and hitting-time statistics of successful trials.
nlohmann::ordered_json summarize_outcomes(const std::vector<TrialOutcome>& outcomes);

/// Each command writes its artifacts to spec.out and returns summary.json.
nlohmann::ordered_json cmd_run(const ExperimentSpec& spec);
nlohmann::ordered_json cmd_trajectory(const ExperimentSpec& spec);
nlohmann::ordered_json cmd_separation(const ExperimentSpec& spec);

/// Separation arms derived from one peaked-function configuration.
struct SeparationArm {
  std::string name;
  ExperimentSpec spec;
  Algorithm algorithm;
};
std::vector<SeparationArm> separation_arms(const ExperimentSpec& base);

/// Ordered key=value report of one theory operation.
using Report = std::vector<std::pair<std::string, std::string>>;
void print_report(std::ostream& out, const Report& report);

Report theory_ell(double chi_high, std::size_t n, double ratio);
Report theory_beta(double gamma);
Report theory_drift(const std::string& rates, double alpha0, double delta);
Report theory_two_rate(double chi_low, double chi_high, double q_high, double alpha0);
Report theory_level_bound(std::size_t m, double z_star, const std::string& z, double delta, double gamma0,
                          double lambda);
Report theory_constraints(double chi_low, double chi_high, std::size_t n, std::size_t mu, std::size_t lambda,
                          double epsilon, std::optional<double> p);
Report theory_survival(std::size_t i, double chi_low, double chi_high, std::size_t n);
Report theory_exp_bound(double delta, double chi, std::size_t n);
Report theory_tail(std::size_t lambda, double p, std::size_t k, double delta);
Report theory_gamma_star(double sigma, double rho);
Report theory_peak_height(std::size_t n, double chi_high);

}  // namespace saea::experiment
