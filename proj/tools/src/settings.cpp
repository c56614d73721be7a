#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <thread>

#include "saea/errors.hpp"
#include "saea/experiment.hpp"
#include "saea/theory.hpp"

namespace saea::experiment {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

const std::map<std::string, std::string>& defaults() {
  static const Settings d = {
      {"n", "100"},
      {"lambda", "100"},
      {"selection", "tournament"},
      {"k", "2"},
      {"mu", "auto"},
      {"strategy", "adapt"},
      {"rates", "1"},
      {"rate_index", "0"},
      {"p", "0.05"},
      {"fitness", "leading-ones"},
      {"m", "auto"},
      {"init", "uniform"},
      {"init_rate", "uniform"},
      {"budget_evals", "auto"},
      {"trials", "1"},
      {"seed", "1"},
      {"workers", "auto"},
      {"out", "."},
      {"records", "true"},
      {"epsilon", "0.5"},
      {"elitist_mu", "auto"},
      {"elitist_rate_index", "auto"},
  };
  return d;
}

std::uint64_t parse_uint(const Settings& s, const std::string& key) {
  const std::string& text = s.at(key);
  try {
    std::size_t used = 0;
    if (!text.empty() && text.front() == '-') throw std::invalid_argument("negative");
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw usage_error("setting '" + key + "' expects a non-negative integer, got '" + text + "'");
  }
}

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw usage_error("setting '" + key + "' expects a number, got '" + text + "'");
  }
}

bool parse_bool(const Settings& s, const std::string& key) {
  const std::string& v = s.at(key);
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw usage_error("setting '" + key + "' expects true or false, got '" + v + "'");
}

std::vector<double> parse_rates(const std::string& text) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '[') body.erase(0, 1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  std::vector<double> rates;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) rates.push_back(parse_double("rates", trim(item)));
  if (rates.empty()) throw usage_error("setting 'rates' must list at least one value");
  return rates;
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

std::vector<std::string> preset_names() {
  return {"lo-selfadapt",  "paper-trajectory",   "trajectory-scaled",
          "fm-separation", "fm-separation-desk", "onemax-smoke"};
}

Settings preset(const std::string& name) {
  if (name == "lo-selfadapt") {
    // (mu,lambda) regime on LeadingOnes. chi_high = 4 gives ell = 51 for
    // mu/lambda = 1/8 at n = 100; chi_low = 0.4 meets the low-rate constraint
    // for any epsilon up to about 4.3.
    return {{"n", "100"},          {"lambda", "320"},     {"selection", "mu-comma"}, {"mu", "40"},
            {"strategy", "adapt"}, {"rates", "0.4,4"},    {"p", "0.05"},             {"fitness", "leading-ones"},
            {"init", "uniform"},   {"init_rate", "uniform"}, {"budget_evals", "1000000"}, {"trials", "30"},
            {"epsilon", "0.5"},    {"records", "true"}};
  }
  if (name == "paper-trajectory" || name == "trajectory-scaled") {
    return {{"n", "200"},          {"lambda", "2000"},       {"selection", "mu-comma"}, {"mu", "500"},
            {"strategy", "adapt"}, {"rates", "0.4,2"},       {"p", "0.001"},            {"fitness", "leading-ones"},
            {"init", "uniform"},   {"init_rate", "uniform"}, {"budget_evals", "auto"},
            {"trials", name == "paper-trajectory" ? "1000" : "30"},
            {"records", "false"}};
  }
  if (name == "fm-separation" || name == "fm-separation-desk") {
    // Tournament size 2 on f_m from 0^n: chi_low = ln(3/2) - 0.005, p = 1/20.
    // The plain preset uses chi_high = 1.1 with the default peak height
    // floor(ln(171/85)(n-1)/chi_high). At n = 100 that peak is too tall for
    // the self-adaptive EA to leave within the budget, so the desk variant
    // takes chi_high = 1.5 (above ln 3 + ln(33/32)) and m = 10.
    const bool desk = name == "fm-separation-desk";
    return {{"n", "100"},
            {"lambda", "1000"},
            {"selection", "tournament"},
            {"k", "2"},
            {"strategy", "adapt"},
            {"rates", fmt(std::log(1.5) - 0.005) + (desk ? ",1.5" : ",1.1")},
            {"p", "0.05"},
            {"fitness", "peaked"},
            {"m", desk ? "10" : "auto"},
            {"init", "zeros"},
            {"init_rate", "uniform"},
            {"budget_evals", "1000000"},
            {"trials", "30"},
            {"records", "false"},
            {"elitist_mu", "auto"},
            {"elitist_rate_index", "auto"}};
  }
  if (name == "onemax-smoke") {
    return {{"n", "16"},         {"lambda", "8"},       {"selection", "tournament"}, {"strategy", "fixed"},
            {"rates", "1"},      {"fitness", "one-max"}, {"init", "uniform"},          {"trials", "1"},
            {"records", "true"}};
  }
  throw usage_error("unknown preset '" + name + "'");
}

Settings parse_settings(std::istream& in) {
  Settings s;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw usage_error("config line " + std::to_string(number) + ": expected key=value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw usage_error("config line " + std::to_string(number) + ": empty key");
    s[key] = value;
  }
  return s;
}

Settings load_settings_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot read config file " + path.string());
  return parse_settings(in);
}

Settings merge(Settings base, const Settings& overrides) {
  for (const auto& [k, v] : overrides) base[k] = v;
  return base;
}

ExperimentSpec resolve(const Settings& input) {
  for (const auto& [key, value] : input) {
    if (key != "preset" && !defaults().contains(key)) throw usage_error("unknown setting '" + key + "'");
  }
  Settings s = merge(defaults(), input);
  s.erase("preset");

  const std::size_t n = parse_uint(s, "n");
  const std::size_t lambda = parse_uint(s, "lambda");
  if (n == 0 || lambda == 0) throw usage_error("n and lambda must be positive");

  const RateSet rates(parse_rates(s.at("rates")), n);
  // Canonical text so that "0.40" and "0.4" describe the same run.
  std::string canonical;
  for (std::size_t i = 0; i < rates.size(); ++i) canonical += (i ? "," : "") + fmt(rates.chi(i));
  s["rates"] = canonical;

  std::optional<SelectionMechanism> selection;
  if (s.at("selection") == "tournament") {
    selection = SelectionMechanism::tournament(parse_uint(s, "k"));
    s["mu"] = "-";
  } else if (s.at("selection") == "mu-comma") {
    if (s.at("mu") == "auto") s["mu"] = std::to_string(std::max<std::size_t>(1, lambda / 8));
    selection = SelectionMechanism::mu_comma(parse_uint(s, "mu"));
    s["k"] = "-";
  } else {
    throw usage_error("selection must be tournament or mu-comma");
  }

  std::optional<MutationStrategy> strategy;
  const double p = parse_double("p", s.at("p"));
  if (s.at("strategy") == "fixed") {
    strategy = MutationStrategy::fixed(rates, parse_uint(s, "rate_index"));
  } else if (s.at("strategy") == "mix") {
    strategy = MutationStrategy::uniform_mix(rates);
  } else if (s.at("strategy") == "adapt") {
    strategy = MutationStrategy::self_adaptive(rates, p);
  } else {
    throw usage_error("strategy must be fixed, mix or adapt");
  }

  std::optional<FitnessFunction> fitness;
  const std::string& fname = s.at("fitness");
  if (fname == "leading-ones") {
    fitness = FitnessFunction::leading_ones(n);
    s["m"] = "-";
  } else if (fname == "one-max") {
    fitness = FitnessFunction::one_max(n);
    s["m"] = "-";
  } else if (fname == "peaked") {
    if (s.at("m") == "auto") s["m"] = std::to_string(default_peak_height(n, rates.chi(rates.high_index())));
    const auto m = parse_uint(s, "m");
    fitness = FitnessFunction::peaked(n, static_cast<int>(m));
  } else {
    throw usage_error("fitness must be leading-ones, one-max or peaked");
  }

  Initializer init = UniformInit{};
  const std::string& init_name = s.at("init");
  if (init_name != "uniform") {
    PointInit point;
    if (init_name == "zeros") {
      point.point = Genome::zeros(n);
    } else if (init_name == "ones") {
      point.point = Genome::ones(n);
    } else {
      point.point = Genome::from_string(init_name);
      if (point.point.size() != n) throw usage_error("init bitstring must have length n");
    }
    if (s.at("init_rate") != "uniform") {
      const auto idx = parse_uint(s, "init_rate");
      if (!rates.valid_index(idx)) throw usage_error("init_rate out of range");
      point.rate_index = static_cast<std::uint32_t>(idx);
    }
    init = point;
  } else if (s.at("init_rate") != "uniform") {
    throw usage_error("init_rate applies only to point initialisation");
  }

  if (s.at("budget_evals") == "auto") s["budget_evals"] = std::to_string(default_budget_evaluations(n));
  const std::uint64_t budget = parse_uint(s, "budget_evals");
  const std::uint64_t generations = generations_for_budget(budget, lambda);
  if (generations == 0) throw usage_error("budget_evals must cover at least one generation of lambda evaluations");

  RunConfig run{n, lambda, *selection, *strategy, *fitness, init, generations, 0};
  ExperimentSpec spec(run);
  spec.trials = parse_uint(s, "trials");
  if (spec.trials == 0) throw usage_error("trials must be at least 1");
  spec.seed = parse_uint(s, "seed");
  if (s.at("workers") == "auto") {
    spec.workers = std::max(1U, std::thread::hardware_concurrency());
  } else {
    spec.workers = static_cast<unsigned>(std::max<std::uint64_t>(1, parse_uint(s, "workers")));
  }
  spec.out = s.at("out");
  spec.records = parse_bool(s, "records");
  parse_double("epsilon", s.at("epsilon"));

  spec.run.master_seed = spec.seed;
  spec.run.validate();

  if (s.at("elitist_mu") == "auto") s["elitist_mu"] = std::to_string(lambda);
  spec.elitist_mu = parse_uint(s, "elitist_mu");
  if (spec.elitist_mu == 0) throw usage_error("elitist_mu must be positive");
  if (s.at("elitist_rate_index") == "auto") s["elitist_rate_index"] = std::to_string(rates.high_index());
  spec.elitist_rate_index = parse_uint(s, "elitist_rate_index");
  if (!rates.valid_index(spec.elitist_rate_index)) throw usage_error("elitist_rate_index out of range");

  // Level partition for the A_{-1} / B observables.
  if (rates.size() >= 2 && rates.chi(rates.high_index()) < static_cast<double>(n)) {
    const double chi_high = rates.chi(rates.high_index());
    if (fitness->kind() == FitnessFunction::Kind::peaked_leading_ones) {
      const auto ell = theory::solve_ell(chi_high, n, 85.0 / 171.0);
      if (ell <= n && static_cast<int>(ell) > fitness->peak_height()) {
        spec.levels = LevelPartitionSpec::peak_levels(n, static_cast<int>(ell), fitness->peak_height(), rates.size());
      }
    } else if (fitness->kind() == FitnessFunction::Kind::leading_ones) {
      const double ratio = 1.0 / selection->max_reproductive_rate(lambda);
      if (ratio < 1.0) {
        const auto ell = theory::solve_ell(chi_high, n, ratio);
        if (ell <= n) spec.levels = LevelPartitionSpec::leading_ones_levels(n, static_cast<int>(ell), rates.size());
      }
    }
  }

  spec.settings = std::move(s);
  return spec;
}

std::vector<std::string> describe(const ExperimentSpec& spec) {
  std::vector<std::string> lines;
  for (const auto& [key, value] : spec.settings) {
    if (key == "out" || key == "workers") continue;
    lines.push_back(key + "=" + value);
  }
  if (spec.levels) {
    lines.push_back(std::string("levels=") +
                    (spec.levels->scheme() == LevelPartitionSpec::Scheme::peak_levels ? "peak" : "leading-ones") +
                    " ell=" + std::to_string(spec.levels->ell()));
  }
  return lines;
}

}  // namespace saea::experiment
