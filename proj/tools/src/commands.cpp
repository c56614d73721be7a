#include <fstream>
#include <sstream>

#include "saea/experiment.hpp"

namespace saea::experiment {
namespace {

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw io_error("cannot create output directory " + dir.string());
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot write " + path.string());
  out << content;
  if (!out.flush()) throw io_error("write failed for " + path.string());
}

nlohmann::ordered_json config_json(const ExperimentSpec& spec) {
  nlohmann::ordered_json j;
  for (const auto& line : describe(spec)) {
    const auto eq = line.find('=');
    j[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return j;
}

std::vector<std::string> with_header(std::string title, const ExperimentSpec& spec) {
  std::vector<std::string> lines{std::move(title)};
  for (auto& l : describe(spec)) lines.push_back(std::move(l));
  return lines;
}

void write_run_csvs(const ExperimentSpec& spec, const std::vector<TrialOutcome>& outcomes,
                    const std::string& prefix = "run_") {
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    std::ostringstream csv;
    write_records_csv(csv, outcomes[i].records, with_header("trial=" + std::to_string(i), spec));
    write_file(spec.out / (prefix + std::to_string(i) + ".csv"), csv.str());
  }
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

nlohmann::ordered_json cmd_run(const ExperimentSpec& spec) {
  ensure_directory(spec.out);
  const auto outcomes = run_batch(spec, spec.records);
  if (spec.records) write_run_csvs(spec, outcomes);
  nlohmann::ordered_json summary;
  summary["command"] = "run";
  summary["config"] = config_json(spec);
  summary["seed"] = spec.seed;
  summary.update(summarize_outcomes(outcomes));
  write_file(spec.out / "summary.json", dump(summary));
  return summary;
}

nlohmann::ordered_json cmd_trajectory(const ExperimentSpec& spec) {
  if (!spec.run.mutation.is_self_adaptive() || spec.run.mutation.rates().size() != 2) {
    throw usage_error("trajectory requires self-adaptation over exactly two rates");
  }
  ensure_directory(spec.out);
  const auto outcomes = run_batch(spec, true);
  if (spec.records) write_run_csvs(spec, outcomes);

  TrajectoryAggregator agg(spec.run.n);
  for (const auto& o : outcomes) agg.add(o.records);
  const auto bins = agg.summarize();
  std::ostringstream csv;
  write_trajectory_csv(csv, bins, with_header("trajectory of frac_low by ranked fitness j", spec));
  write_file(spec.out / "trajectory.csv", csv.str());

  nlohmann::ordered_json summary;
  summary["command"] = "trajectory";
  summary["config"] = config_json(spec);
  summary["seed"] = spec.seed;
  summary.update(summarize_outcomes(outcomes));
  std::size_t populated = 0;
  for (const auto& b : bins) populated += b.summary ? 1 : 0;
  summary["populated_bins"] = populated;
  write_file(spec.out / "summary.json", dump(summary));
  return summary;
}

std::vector<SeparationArm> separation_arms(const ExperimentSpec& base) {
  const auto& rates = base.run.mutation.rates();
  if (rates.size() != 2) throw usage_error("separation requires exactly two rates (chi_low, chi_high)");
  if (base.run.fitness.kind() != FitnessFunction::Kind::peaked_leading_ones) {
    throw usage_error("separation requires fitness=peaked");
  }
  const auto* point = std::get_if<PointInit>(&base.run.init);
  if (point == nullptr || !point->point.all_zero()) throw usage_error("separation requires init=zeros");

  double p = 0.05;
  if (const auto* sa = std::get_if<SelfAdaptive>(&base.run.mutation.kind())) p = sa->p;

  std::vector<SeparationArm> arms;
  auto arm = [&](std::string name, MutationStrategy strategy, Algorithm algorithm, const std::string& label) {
    ExperimentSpec s = base;
    s.run.mutation = std::move(strategy);
    s.settings["strategy"] = label;
    if (algorithm == Algorithm::elitist_baseline) {
      s.run.selection = SelectionMechanism::mu_comma(std::min(base.elitist_mu, base.run.lambda));
      s.settings["selection"] = "mu-plus-lambda";
      s.settings["mu"] = std::to_string(std::min(base.elitist_mu, base.run.lambda));
      s.settings["k"] = "-";
      s.settings["rate_index"] = std::to_string(base.elitist_rate_index);
    }
    if (label == "fixed" && algorithm == Algorithm::non_elitist) s.settings["rate_index"] = "0";
    arms.push_back({std::move(name), std::move(s), algorithm});
  };
  arm("self-adaptive", MutationStrategy::self_adaptive(rates, p), Algorithm::non_elitist, "adapt");
  arm("fixed-low", MutationStrategy::fixed(rates, rates.low_index()), Algorithm::non_elitist, "fixed");
  arm("uniform-mix", MutationStrategy::uniform_mix(rates), Algorithm::non_elitist, "mix");
  arm("elitist", MutationStrategy::fixed(rates, base.elitist_rate_index), Algorithm::elitist_baseline, "fixed");
  return arms;
}

nlohmann::ordered_json cmd_separation(const ExperimentSpec& spec) {
  ensure_directory(spec.out);
  nlohmann::ordered_json summary;
  summary["command"] = "separation";
  summary["config"] = config_json(spec);
  summary["seed"] = spec.seed;

  std::ostringstream csv;
  for (const auto& line : with_header("separation arms on the peaked function", spec)) csv << "# " << line << '\n';
  csv << "arm,successes,trials,hit_mean,hit_min,hit_q1,hit_median,hit_q3,hit_max\n";

  nlohmann::ordered_json arms = nlohmann::ordered_json::array();
  for (const auto& arm : separation_arms(spec)) {
    const auto outcomes = run_batch(arm.spec, arm.spec.records, arm.algorithm);
    if (arm.spec.records) write_run_csvs(arm.spec, outcomes, arm.name + "_run_");
    auto s = summarize_outcomes(outcomes);
    nlohmann::ordered_json entry;
    entry["arm"] = arm.name;
    entry["strategy"] = arm.spec.settings.at("strategy");
    entry["selection"] = arm.spec.settings.at("selection");
    entry.update(s);
    csv << arm.name << ',' << s["successes"].get<std::size_t>() << ',' << s["trials"].get<std::size_t>();
    if (s["hitting_time_evaluations"].is_null()) {
      csv << ",,,,,,";
    } else {
      const auto& h = s["hitting_time_evaluations"];
      for (const char* key : {"mean", "min", "q1", "median", "q3", "max"}) csv << ',' << format_double(h[key].get<double>());
    }
    csv << '\n';
    arms.push_back(std::move(entry));
  }
  summary["arms"] = std::move(arms);
  write_file(spec.out / "separation.csv", csv.str());
  write_file(spec.out / "separation.json", dump(summary));
  write_file(spec.out / "summary.json", dump(summary));
  return summary;
}

}  // namespace saea::experiment
