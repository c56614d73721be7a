#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "saea/errors.hpp"
#include "saea/experiment.hpp"

using namespace saea;
using namespace saea::experiment;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("saea_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string report_value(const Report& report, const std::string& key) {
  for (const auto& [k, v] : report) {
    if (k == key) return v;
  }
  return "<missing>";
}

}  // namespace

TEST_CASE("settings parser") {
  std::istringstream in(
      "# comment\n"
      "n = 30\n"
      "\n"
      "  lambda=12   # trailing comment\n"
      "rates = 0.5, 2\n");
  const Settings s = parse_settings(in);
  CHECK(s.at("n") == "30");
  CHECK(s.at("lambda") == "12");
  CHECK(s.at("rates") == "0.5, 2");
  std::istringstream bad("no equals sign\n");
  CHECK_THROWS_AS(parse_settings(bad), usage_error);
  CHECK(merge({{"n", "1"}, {"k", "2"}}, {{"n", "5"}}) == Settings{{"n", "5"}, {"k", "2"}});
}

TEST_CASE("every preset resolves") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const ExperimentSpec spec = resolve(preset(name));
    CHECK_NOTHROW(spec.run.validate());
  }
  CHECK_THROWS_AS(preset("nope"), usage_error);
}

TEST_CASE("preset contents") {
  const auto lo = resolve(preset("lo-selfadapt"));
  CHECK(lo.run.n == 100);
  CHECK(lo.run.lambda == 320);
  CHECK(std::get<MuComma>(lo.run.selection.kind()).mu == 40);
  CHECK(lo.run.max_generations == 3125);
  CHECK(lo.trials == 30);
  REQUIRE(lo.levels.has_value());
  CHECK(lo.levels->ell() == 51);

  const auto traj = resolve(preset("trajectory-scaled"));
  CHECK(traj.run.n == 200);
  CHECK(traj.run.lambda == 2000);
  CHECK(std::get<MuComma>(traj.run.selection.kind()).mu == 500);
  CHECK(std::get<SelfAdaptive>(traj.run.mutation.kind()).p == 0.001);
  CHECK(traj.run.mutation.rates().chis() == std::vector<double>{0.4, 2.0});
  CHECK(traj.run.max_generations == 2000);
  CHECK(resolve(preset("paper-trajectory")).trials == 1000);

  const auto sep = resolve(preset("fm-separation"));
  CHECK(sep.run.fitness.peak_height() == 62);
  CHECK(sep.run.mutation.rates().chi(1) == 1.1);
  CHECK(sep.run.max_generations == 1000);
  CHECK(sep.elitist_mu == 1000);
  CHECK(sep.elitist_rate_index == 1);
  const auto desk = resolve(preset("fm-separation-desk"));
  CHECK(desk.run.fitness.peak_height() == 10);
  CHECK(desk.run.mutation.rates().chi(1) == 1.5);
  REQUIRE(desk.levels.has_value());
  CHECK(desk.levels->scheme() == LevelPartitionSpec::Scheme::peak_levels);
}

TEST_CASE("resolve rejects bad settings") {
  CHECK_THROWS_AS(resolve({{"bogus", "1"}}), usage_error);
  CHECK_THROWS_AS(resolve({{"n", "abc"}}), usage_error);
  CHECK_THROWS_AS(resolve({{"n", "-3"}}), usage_error);
  CHECK_THROWS_AS(resolve({{"selection", "roulette"}}), usage_error);
  CHECK_THROWS_AS(resolve({{"strategy", "adapt"}, {"p", "0.9"}, {"rates", "1,2"}}), configuration_error);
  CHECK_THROWS_AS(resolve({{"rates", "2,1"}}), configuration_error);
}

TEST_CASE("describe omits settings that cannot change results") {
  Settings s = preset("onemax-smoke");
  s["out"] = "/somewhere";
  s["workers"] = "7";
  const auto lines = describe(resolve(s));
  for (const auto& line : lines) {
    CHECK(line.rfind("out=", 0) != 0);
    CHECK(line.rfind("workers=", 0) != 0);
  }
  CHECK(std::find(lines.begin(), lines.end(), "seed=1") != lines.end());
}

TEST_CASE("tiny run succeeds and reruns byte-identically") {
  Settings s = preset("onemax-smoke");
  s["out"] = scratch("run_a").string();
  const auto summary = cmd_run(resolve(s));
  CHECK(summary["successes"] == 1);
  CHECK(summary["trials"] == 1);
  const std::string first = slurp(fs::path(s["out"]) / "summary.json");
  const std::string first_csv = slurp(fs::path(s["out"]) / "run_0.csv");
  CHECK(first_csv.find("t,best,ranked_q,frac_low,count_Aminus1,count_B,max_rr\n") != std::string::npos);
  (void)cmd_run(resolve(s));
  CHECK(slurp(fs::path(s["out"]) / "summary.json") == first);
  CHECK(slurp(fs::path(s["out"]) / "run_0.csv") == first_csv);
}

TEST_CASE("worker count does not change any artifact") {
  Settings s = preset("lo-selfadapt");
  s["n"] = "40";
  s["lambda"] = "64";
  s["mu"] = "8";
  s["trials"] = "6";
  s["budget_evals"] = "auto";
  std::vector<std::string> summaries;
  std::vector<std::string> csvs;
  for (const char* workers : {"1", "3"}) {
    s["workers"] = workers;
    s["out"] = scratch(std::string("workers_") + workers).string();
    (void)cmd_run(resolve(s));
    summaries.push_back(slurp(fs::path(s["out"]) / "summary.json"));
    std::string all;
    for (int i = 0; i < 6; ++i) all += slurp(fs::path(s["out"]) / ("run_" + std::to_string(i) + ".csv"));
    csvs.push_back(all);
  }
  CHECK(summaries[0] == summaries[1]);
  CHECK(csvs[0] == csvs[1]);
  CHECK_FALSE(csvs[0].empty());
}

TEST_CASE("batch outcomes are indexed by trial") {
  Settings s = preset("onemax-smoke");
  s["trials"] = "5";
  s["workers"] = "2";
  const auto spec = resolve(s);
  const auto outcomes = run_batch(spec, false);
  REQUIRE(outcomes.size() == 5);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    RunConfig config = spec.run;
    CHECK(outcomes[i].result == run(config, i));
    CHECK(outcomes[i].records.empty());
  }
}

TEST_CASE("trajectory command output") {
  Settings s = preset("trajectory-scaled");
  s["n"] = "40";
  s["lambda"] = "200";
  s["mu"] = "50";
  s["trials"] = "2";
  s["out"] = scratch("trajectory").string();
  const auto summary = cmd_trajectory(resolve(s));
  CHECK(summary["populated_bins"].get<int>() > 0);
  const std::string csv = slurp(fs::path(s["out"]) / "trajectory.csv");
  CHECK(csv.find("j,min,q1,median,q3,max,count\n") != std::string::npos);
  CHECK(csv.find("# rates=0.4,2\n") != std::string::npos);

  Settings fixed = s;
  fixed["strategy"] = "fixed";
  CHECK_THROWS_AS(cmd_trajectory(resolve(fixed)), usage_error);
}

TEST_CASE("separation arms") {
  const auto arms = separation_arms(resolve(preset("fm-separation")));
  REQUIRE(arms.size() == 4);
  CHECK(arms[0].name == "self-adaptive");
  CHECK(arms[0].spec.run.mutation.is_self_adaptive());
  CHECK(arms[1].name == "fixed-low");
  CHECK(std::get<FixedRate>(arms[1].spec.run.mutation.kind()).rate_index == 0);
  CHECK(arms[2].name == "uniform-mix");
  CHECK(arms[2].spec.run.mutation.is_uniform_mix());
  CHECK(arms[3].name == "elitist");
  CHECK(arms[3].algorithm == Algorithm::elitist_baseline);
  CHECK(std::get<FixedRate>(arms[3].spec.run.mutation.kind()).rate_index == 1);
  for (const auto& arm : arms) CHECK(arm.spec.run.max_generations == 1000);

  Settings lo = preset("lo-selfadapt");
  CHECK_THROWS_AS(separation_arms(resolve(lo)), usage_error);
}

TEST_CASE("small separation run writes its table") {
  Settings s = preset("fm-separation-desk");
  s["n"] = "20";
  s["lambda"] = "50";
  s["m"] = "2";
  s["trials"] = "2";
  s["budget_evals"] = "20000";
  s["out"] = scratch("separation").string();
  const auto summary = cmd_separation(resolve(s));
  CHECK(summary["arms"].size() == 4);
  const std::string csv = slurp(fs::path(s["out"]) / "separation.csv");
  CHECK(csv.find("arm,successes,trials,hit_mean,hit_min,hit_q1,hit_median,hit_q3,hit_max\n") != std::string::npos);
  CHECK(csv.find("\nelitist,") != std::string::npos);
}

TEST_CASE("unwritable output directory") {
  const fs::path file = scratch("blocker");
  std::ofstream(file) << "x";
  Settings s = preset("onemax-smoke");
  s["out"] = (file / "sub").string();
  CHECK_THROWS_AS(cmd_run(resolve(s)), io_error);
}

TEST_CASE("theory reports") {
  CHECK(report_value(theory_ell(2.0, 200, 0.25), "ell") == "138");
  CHECK(report_value(theory_beta(0.5), "beta") == "0.75");
  CHECK(report_value(theory_drift("0.398:0.5,1.129:0.5", 2.0, 0.003), "verdict") == "inefficient");
  CHECK(report_value(theory_drift("0.398:0.5,1.129:0.5", 2.0, 0.01), "verdict") == "inconclusive");
  CHECK_THROWS_AS(theory_drift("0.398-0.5", 2.0, 0.01), usage_error);
  CHECK(std::stod(report_value(theory_gamma_star(3.0 / 20, 17.0 / 36), "gamma_star")) == doctest::Approx(0.2));
  CHECK(report_value(theory_peak_height(100, 1.1), "m") == "62");
  CHECK(report_value(theory_tail(100, 0.09, 10, 0.1), "bound").rfind("0.99501", 0) == 0);
  std::ostringstream out;
  print_report(out, {{"a", "1"}, {"b", "x"}});
  CHECK(out.str() == "a=1\nb=x\n");
}
