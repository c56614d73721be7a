#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "saea/experiment.hpp"
#include "saea/statistics.hpp"

namespace saea::experiment {

std::vector<TrialOutcome> run_batch(const ExperimentSpec& spec, bool keep_records, Algorithm algorithm) {
  std::vector<TrialOutcome> outcomes(spec.trials);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::uint64_t trial = next++; trial < spec.trials; trial = next++) {
      try {
        TrialOutcome& out = outcomes[trial];
        if (keep_records) {
          GenerationRecorder recorder(spec.levels);
          out.result = algorithm == Algorithm::elitist_baseline ? run_elitist_baseline(spec.run, trial, recorder.hooks())
                                                                : run(spec.run, trial, recorder.hooks());
          out.records = recorder.take();
        } else {
          out.result = algorithm == Algorithm::elitist_baseline ? run_elitist_baseline(spec.run, trial)
                                                                : run(spec.run, trial);
        }
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const auto threads = static_cast<std::size_t>(std::min<std::uint64_t>(spec.workers, spec.trials));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

nlohmann::ordered_json summarize_outcomes(const std::vector<TrialOutcome>& outcomes) {
  nlohmann::ordered_json j;
  std::vector<double> hits;
  for (const auto& o : outcomes) {
    if (o.result.success) hits.push_back(static_cast<double>(*o.result.hitting_time_evaluations));
  }
  j["trials"] = outcomes.size();
  j["successes"] = hits.size();
  if (const auto s = summarize(hits)) {
    j["hitting_time_evaluations"] = {{"mean", s->mean}, {"min", s->min},       {"q1", s->q1},
                                     {"median", s->median}, {"q3", s->q3}, {"max", s->max}};
  } else {
    j["hitting_time_evaluations"] = nullptr;
  }
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& r = outcomes[i].result;
    nlohmann::ordered_json row;
    row["trial"] = i;
    row["success"] = r.success;
    row["hitting_time_evaluations"] = r.hitting_time_evaluations ? nlohmann::ordered_json(*r.hitting_time_evaluations)
                                                                 : nlohmann::ordered_json(nullptr);
    row["generations"] = r.generations_used;
    row["evaluations"] = r.evaluations;
    row["best_fitness"] = r.best_fitness;
    runs.push_back(std::move(row));
  }
  j["runs"] = std::move(runs);
  return j;
}

}  // namespace saea::experiment
