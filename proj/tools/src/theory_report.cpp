#include <ostream>
#include <sstream>

#include "saea/experiment.hpp"
#include "saea/theory.hpp"

namespace saea::experiment {
namespace {

std::string num(double v) { return format_double(v); }
std::string flag(bool v) { return v ? "true" : "false"; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double to_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw usage_error("cannot parse " + what + " value '" + text + "'");
}

}  // namespace

void print_report(std::ostream& out, const Report& report) {
  for (const auto& [key, value] : report) out << key << '=' << value << '\n';
}

Report theory_ell(double chi_high, std::size_t n, double ratio) {
  const auto ell = theory::solve_ell(chi_high, n, ratio);
  return {{"ell", std::to_string(ell)},
          {"power_ell", num(theory::survival_power(chi_high, n, ell))},
          {"power_ell_minus_1", num(theory::survival_power(chi_high, n, ell - 1))}};
}

Report theory_beta(double gamma) { return {{"beta", num(theory::beta(gamma))}}; }

Report theory_drift(const std::string& rates, double alpha0, double delta) {
  theory::DriftQuery q;
  q.alpha0 = alpha0;
  q.delta = delta;
  for (const auto& item : split(rates, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw usage_error("drift rates must be chi:q pairs, got '" + item + "'");
    q.rates.push_back({to_double(item.substr(0, colon), "chi"), to_double(item.substr(colon + 1), "q")});
  }
  const auto r = theory::drift_report(q);
  return {{"verdict", theory::to_string(r.verdict)},
          {"weighted_sum", num(r.weighted_sum)},
          {"threshold", num(r.threshold)},
          {"max_delta", num(r.margin)},
          {"chi_max", num(r.chi_max)}};
}

Report theory_two_rate(double chi_low, double chi_high, double q_high, double alpha0) {
  const auto a = theory::two_rate_analysis(chi_low, chi_high, alpha0);
  return {{"verdict", theory::to_string(theory::two_rate_verdict(chi_low, chi_high, q_high, alpha0))},
          {"delta1", num(a.delta1)},
          {"delta2", num(a.delta2)},
          {"critical_q_high", num(a.critical_high_probability)},
          {"applicable", flag(a.applicable)}};
}

Report theory_level_bound(std::size_t m, double z_star, const std::string& z, double delta, double gamma0,
                          double lambda) {
  theory::LevelBasedParams p;
  p.m = m;
  p.z_star = z_star;
  p.delta = delta;
  p.gamma0 = gamma0;
  p.lambda = lambda;
  for (const auto& item : split(z, ',')) p.z.push_back(to_double(item, "z"));
  const auto b = theory::level_based_bound(p);
  return {{"a", num(b.a)},
          {"epsilon", num(b.epsilon)},
          {"c", num(b.c)},
          {"lambda_threshold", std::to_string(b.lambda_threshold)},
          {"lambda_threshold_real", num(b.lambda_threshold_real)},
          {"population_condition", flag(b.population_condition_holds)},
          {"sum_inverse_z", num(b.sum_inverse_z)},
          {"expected_time_bound", num(b.expected_time_bound)}};
}

Report theory_constraints(double chi_low, double chi_high, std::size_t n, std::size_t mu, std::size_t lambda,
                          double epsilon, std::optional<double> p) {
  const auto r = theory::check_rate_constraints(chi_low, chi_high, n, mu, lambda, epsilon, p);
  Report out{{"ratio", num(r.ratio)},
             {"low_lhs", num(r.low_lhs)},
             {"low_rhs", num(r.low_rhs)},
             {"low_holds", flag(r.low_holds)},
             {"ell", std::to_string(r.ell)},
             {"ell_in_range", flag(r.ell_in_range)}};
  if (r.p) {
    out.emplace_back("p", num(*r.p));
    out.emplace_back("p_lhs", num(r.p_lhs));
    out.emplace_back("p_rhs", num(r.p_rhs));
    out.emplace_back("p_holds", flag(r.p_holds));
  }
  out.emplace_back("ell_peak", std::to_string(r.ell_peak));
  out.emplace_back("default_m", r.default_m ? std::to_string(*r.default_m) : "");
  out.emplace_back("ell_peak_exceeds_m", flag(r.ell_peak_exceeds_m));
  out.emplace_back("psi", num(r.psi));
  out.emplace_back("xi", num(r.xi));
  return out;
}

Report theory_survival(std::size_t i, double chi_low, double chi_high, std::size_t n) {
  const auto [q, r] = theory::survival_probs(i, chi_low, chi_high, n);
  return {{"q", num(q)}, {"r", num(r)}};
}

Report theory_exp_bound(double delta, double chi, std::size_t n) {
  const auto r = theory::exp_bound_check(delta, chi, n);
  return {{"lower", num(r.lower)},
          {"value", num(r.value)},
          {"upper", num(r.upper)},
          {"precondition", flag(r.precondition)},
          {"holds", flag(r.holds)}};
}

Report theory_tail(std::size_t lambda, double p, std::size_t k, double delta) {
  return {{"bound", num(theory::binomial_tail_bound(lambda, p, k, delta))}};
}

Report theory_gamma_star(double sigma, double rho) { return {{"gamma_star", num(theory::gamma_star(sigma, rho))}}; }

Report theory_peak_height(std::size_t n, double chi_high) {
  const int m = default_peak_height(n, chi_high);
  const auto ell = theory::solve_ell(chi_high, n, 85.0 / 171.0);
  return {{"m", std::to_string(m)}, {"ell", std::to_string(ell)}, {"ell_exceeds_m", flag(ell > static_cast<std::size_t>(m))}};
}

}  // namespace saea::experiment
