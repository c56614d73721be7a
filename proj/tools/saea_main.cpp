// saea: run self-adaptive EA experiments and evaluate runtime bounds.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "saea/errors.hpp"
#include "saea/experiment.hpp"

namespace {

using saea::experiment::Settings;

struct ExperimentFlags {
  std::string preset;
  std::string config_file;
  std::vector<std::string> sets;
  Settings flags;
  std::optional<bool> records;
};

// Each flag writes straight into the settings map so only flags that were
// given override the preset / config file.
void add_setting_flag(CLI::App* cmd, Settings& target, const std::string& flag, const std::string& key,
                      const std::string& help) {
  cmd->add_option_function<std::string>(
      flag, [&target, key](const std::string& v) { target[key] = v; }, help);
}

void add_experiment_options(CLI::App* cmd, ExperimentFlags& f) {
  cmd->add_option("--preset", f.preset, "Named preset (lo-selfadapt, paper-trajectory, trajectory-scaled, "
                                        "fm-separation, fm-separation-desk, onemax-smoke)");
  cmd->add_option("--config", f.config_file, "Flat key=value configuration file")->check(CLI::ExistingFile);
  cmd->add_option("--set", f.sets, "Override one setting, key=value (repeatable)");
  add_setting_flag(cmd, f.flags, "--n", "n", "Genome length");
  add_setting_flag(cmd, f.flags, "--lambda", "lambda", "Population size");
  add_setting_flag(cmd, f.flags, "--selection", "selection", "tournament or mu-comma");
  add_setting_flag(cmd, f.flags, "--k", "k", "Tournament size");
  add_setting_flag(cmd, f.flags, "--mu", "mu", "mu for (mu,lambda)-selection");
  add_setting_flag(cmd, f.flags, "--strategy", "strategy", "fixed, mix or adapt");
  add_setting_flag(cmd, f.flags, "--rates", "rates", "Comma-separated mutation parameters chi");
  add_setting_flag(cmd, f.flags, "--rate-index", "rate_index", "Rate index for strategy=fixed");
  add_setting_flag(cmd, f.flags, "--p", "p", "Self-adaptation switching probability");
  add_setting_flag(cmd, f.flags, "--fitness", "fitness", "leading-ones, one-max or peaked");
  add_setting_flag(cmd, f.flags, "--m", "m", "Peak height for fitness=peaked (or auto)");
  add_setting_flag(cmd, f.flags, "--init", "init", "uniform, zeros, ones or an explicit bitstring");
  add_setting_flag(cmd, f.flags, "--init-rate", "init_rate", "uniform or a rate index");
  add_setting_flag(cmd, f.flags, "--epsilon", "epsilon", "epsilon reported with the rate constraints");
  add_setting_flag(cmd, f.flags, "--elitist-mu", "elitist_mu", "mu of the elitist baseline arm");
  cmd->add_flag("--records,!--no-records", f.records, "Write per-run GenerationRecord CSV files");
}

Settings gather(const ExperimentFlags& f, const Settings& global, const std::string& default_preset) {
  Settings s;
  const std::string name = f.preset.empty() ? default_preset : f.preset;
  if (!name.empty()) s = saea::experiment::preset(name);
  if (!f.config_file.empty()) s = saea::experiment::merge(s, saea::experiment::load_settings_file(f.config_file));
  for (const auto& kv : f.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw saea::experiment::usage_error("--set expects key=value, got '" + kv + "'");
    s[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  s = saea::experiment::merge(s, f.flags);
  s = saea::experiment::merge(s, global);
  if (f.records) s["records"] = *f.records ? "true" : "false";
  return s;
}

void print_summary_line(const nlohmann::ordered_json& j) {
  if (j.contains("arms")) {
    for (const auto& arm : j["arms"]) {
      std::cout << arm["arm"].get<std::string>() << ": " << arm["successes"] << "/" << arm["trials"] << " successes\n";
    }
    return;
  }
  std::cout << "successes: " << j["successes"] << "/" << j["trials"] << '\n';
  if (!j["hitting_time_evaluations"].is_null()) {
    std::cout << "median hitting time (evaluations): " << j["hitting_time_evaluations"]["median"] << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-adaptive mutation rates in non-elitist populations: experiments and bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings global;
  add_setting_flag(&app, global, "--seed", "seed", "Master seed");
  add_setting_flag(&app, global, "--trials", "trials", "Number of independent trials");
  add_setting_flag(&app, global, "--out", "out", "Output directory");
  add_setting_flag(&app, global, "--workers", "workers", "Worker threads (default: hardware concurrency)");
  add_setting_flag(&app, global, "--budget-evals", "budget_evals", "Evaluation budget per run (default 100 n^2)");

  ExperimentFlags run_flags;
  ExperimentFlags trajectory_flags;
  ExperimentFlags separation_flags;
  auto* run_cmd = app.add_subcommand("run", "Run a batch of seeded trials");
  add_experiment_options(run_cmd, run_flags);
  auto* trajectory_cmd = app.add_subcommand("trajectory", "Rate-fraction trajectory by ranked fitness");
  add_experiment_options(trajectory_cmd, trajectory_flags);
  auto* separation_cmd = app.add_subcommand("separation", "Four-arm comparison on the peaked function");
  add_experiment_options(separation_cmd, separation_flags);

  auto* theory_cmd = app.add_subcommand("theory", "Evaluate closed-form bounds and conditions");
  theory_cmd->require_subcommand(1);
  saea::experiment::Report report;

  double chi_high = 0, chi_low = 0, ratio = 0, gamma = 0, alpha0 = 2, delta = 0, q_high = 0.5;
  double z_star = 0, gamma0 = 0, lambda_value = 0, epsilon = 0, chi = 0, p = 0, sigma = 0, rho = 0;
  std::size_t n = 0, m = 0, mu = 0, lambda = 0, i = 0, k = 0;
  std::optional<double> strategy_p;
  std::string rates, z;

  auto* ell = theory_cmd->add_subcommand("ell", "Solve (1-chi_high/n)^ell < ratio <= (1-chi_high/n)^(ell-1)");
  ell->add_option("--chi-high", chi_high)->required();
  ell->add_option("--n", n)->required();
  ell->add_option("--ratio", ratio)->required();
  ell->callback([&] { report = saea::experiment::theory_ell(chi_high, n, ratio); });

  auto* beta = theory_cmd->add_subcommand("beta", "Binary tournament probability 2 gamma (1 - gamma/2)");
  beta->add_option("--gamma", gamma)->required();
  beta->callback([&] { report = saea::experiment::theory_beta(gamma); });

  auto* drift = theory_cmd->add_subcommand("drift", "Negative-drift condition for several rates");
  drift->add_option("--rates", rates, "chi:q pairs, comma separated")->required();
  drift->add_option("--alpha0", alpha0)->required();
  drift->add_option("--delta", delta)->required();
  drift->callback([&] { report = saea::experiment::theory_drift(rates, alpha0, delta); });

  auto* two_rate = theory_cmd->add_subcommand("two-rate", "Two-rate inefficiency criterion");
  two_rate->add_option("--chi-low", chi_low)->required();
  two_rate->add_option("--chi-high", chi_high)->required();
  two_rate->add_option("--q-high", q_high)->required();
  two_rate->add_option("--alpha0", alpha0)->required();
  two_rate->callback([&] { report = saea::experiment::theory_two_rate(chi_low, chi_high, q_high, alpha0); });

  auto* level = theory_cmd->add_subcommand("level-bound", "Level-based runtime bound");
  level->add_option("--m", m)->required();
  level->add_option("--z-star", z_star)->required();
  level->add_option("--z", z, "Comma-separated z_1..z_m (default: all z_star)");
  level->add_option("--delta", delta)->required();
  level->add_option("--gamma0", gamma0)->required();
  level->add_option("--lambda", lambda_value)->required();
  level->callback([&] {
    report = saea::experiment::theory_level_bound(m, z_star, z, delta, gamma0, lambda_value);
  });

  auto* constraints = theory_cmd->add_subcommand("constraints", "Rate-set constraints for (mu,lambda) and f_m");
  constraints->add_option("--chi-low", chi_low)->required();
  constraints->add_option("--chi-high", chi_high)->required();
  constraints->add_option("--n", n)->required();
  constraints->add_option("--mu", mu)->required();
  constraints->add_option("--lambda", lambda)->required();
  constraints->add_option("--epsilon", epsilon)->required();
  constraints->add_option("--p", strategy_p);
  constraints->callback([&] {
    report = saea::experiment::theory_constraints(chi_low, chi_high, n, mu, lambda, epsilon, strategy_p);
  });

  auto* survival = theory_cmd->add_subcommand("survival", "q(i) and r(i) prefix survival probabilities");
  survival->add_option("--i", i)->required();
  survival->add_option("--chi-low", chi_low)->required();
  survival->add_option("--chi-high", chi_high)->required();
  survival->add_option("--n", n)->required();
  survival->callback([&] { report = saea::experiment::theory_survival(i, chi_low, chi_high, n); });

  auto* exp_bound = theory_cmd->add_subcommand("exp-bound", "(1-delta)e^-chi <= (1-chi/n)^n <= e^-chi");
  exp_bound->add_option("--delta", delta)->required();
  exp_bound->add_option("--chi", chi)->required();
  exp_bound->add_option("--n", n)->required();
  exp_bound->callback([&] { report = saea::experiment::theory_exp_bound(delta, chi, n); });

  auto* tail = theory_cmd->add_subcommand("tail", "Binomial tail bound exp(-k^2 delta^2 / (2 lambda))");
  tail->add_option("--lambda", lambda)->required();
  tail->add_option("--p", p)->required();
  tail->add_option("--k", k)->required();
  tail->add_option("--delta", delta)->required();
  tail->callback([&] { report = saea::experiment::theory_tail(lambda, p, k, delta); });

  auto* gstar = theory_cmd->add_subcommand("gamma-star", "gamma* = 2 - (1 - sigma)/rho");
  gstar->add_option("--sigma", sigma)->required();
  gstar->add_option("--rho", rho)->required();
  gstar->callback([&] { report = saea::experiment::theory_gamma_star(sigma, rho); });

  auto* peak = theory_cmd->add_subcommand("peak-height", "Default f_m peak height and its ell");
  peak->add_option("--n", n)->required();
  peak->add_option("--chi-high", chi_high)->required();
  peak->callback([&] { report = saea::experiment::theory_peak_height(n, chi_high); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const saea::experiment::usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const saea::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const saea::configuration_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (theory_cmd->parsed()) {
      saea::experiment::print_report(std::cout, report);
      return 0;
    }
    nlohmann::ordered_json summary;
    if (run_cmd->parsed()) {
      summary = saea::experiment::cmd_run(saea::experiment::resolve(gather(run_flags, global, "")));
    } else if (trajectory_cmd->parsed()) {
      summary = saea::experiment::cmd_trajectory(
          saea::experiment::resolve(gather(trajectory_flags, global, "trajectory-scaled")));
    } else if (separation_cmd->parsed()) {
      summary = saea::experiment::cmd_separation(
          saea::experiment::resolve(gather(separation_flags, global, "fm-separation")));
    }
    print_summary_line(summary);
  } catch (const saea::experiment::usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const saea::configuration_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const saea::experiment::io_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
