#include "saea/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "saea/errors.hpp"
#include "saea/fitness.hpp"

namespace saea::theory {

LevelBasedBound level_based_bound(const LevelBasedParams& params) {
  if (!(params.delta > 0.0)) throw domain_error("level-based bound requires delta > 0");
  if (!(params.gamma0 > 0.0 && params.gamma0 < 1.0)) throw domain_error("level-based bound requires gamma0 in (0,1)");
  if (params.m == 0) throw domain_error("level-based bound requires at least one level");
  if (!(params.z_star > 0.0 && params.z_star <= 1.0)) throw domain_error("z_star must lie in (0,1]");
  if (!params.z.empty() && params.z.size() != params.m) throw domain_error("need exactly m upgrade probabilities");
  if (!(params.lambda > 0.0)) throw domain_error("lambda must be positive");

  LevelBasedBound b;
  const double delta = params.delta;
  b.a = delta * delta * params.gamma0 / (2.0 * (1.0 + delta));
  b.epsilon = std::min(delta / 2.0, 0.5);
  b.c = std::pow(b.epsilon, 4) / 24.0;

  const auto m = static_cast<double>(params.m);
  b.lambda_threshold_real = (2.0 / b.a) * std::log(16.0 * m / (b.a * b.c * b.epsilon * params.z_star));
  b.lambda_threshold = static_cast<std::uint64_t>(std::max(1.0, std::ceil(b.lambda_threshold_real)));
  b.population_condition_holds = params.lambda >= b.lambda_threshold_real;

  if (params.z.empty()) {
    b.sum_inverse_z = m / params.z_star;
  } else {
    for (double z : params.z) {
      if (!(z > 0.0 && z <= 1.0)) throw domain_error("every z_j must lie in (0,1]");
      if (z < params.z_star) throw domain_error("every z_j must be at least z_star");
      b.sum_inverse_z += 1.0 / z;
    }
  }
  const double lambda = params.lambda;
  b.expected_time_bound =
      (2.0 / (b.c * b.epsilon)) * (m * lambda * (1.0 + std::log1p(b.c * lambda)) + b.sum_inverse_z);
  return b;
}

const char* to_string(Verdict v) { return v == Verdict::inefficient ? "inefficient" : "inconclusive"; }

DriftReport drift_report(const DriftQuery& query) {
  if (query.rates.empty()) throw domain_error("drift query needs at least one rate");
  if (!(query.alpha0 > 0.0)) throw domain_error("drift query requires alpha0 > 0");
  if (!(query.delta > 0.0)) throw domain_error("drift query requires delta > 0");
  double total_q = 0.0;
  DriftReport r;
  for (const auto& rate : query.rates) {
    if (!(rate.q >= 0.0)) throw domain_error("rate probabilities must be non-negative");
    if (!(rate.chi > 0.0) || !std::isfinite(rate.chi)) throw domain_error("rates must be positive and finite");
    total_q += rate.q;
    r.weighted_sum += rate.q * std::exp(-rate.chi);
    r.chi_max = std::max(r.chi_max, rate.chi);
  }
  if (std::abs(total_q - 1.0) > 1e-9) throw domain_error("rate probabilities must sum to 1");
  r.threshold = (1.0 - query.delta) / query.alpha0;
  r.margin = 1.0 - query.alpha0 * r.weighted_sum;
  r.verdict = r.weighted_sum <= r.threshold ? Verdict::inefficient : Verdict::inconclusive;
  return r;
}

Verdict drift_verdict(const DriftQuery& query) { return drift_report(query).verdict; }

Verdict single_rate_verdict(double chi, double alpha0, double delta) {
  if (!(alpha0 > 0.0) || !(delta > 0.0)) throw domain_error("single-rate criterion needs alpha0 > 0 and delta > 0");
  return chi >= std::log(alpha0) + delta ? Verdict::inefficient : Verdict::inconclusive;
}

TwoRateAnalysis two_rate_analysis(double chi_low, double chi_high, double alpha0) {
  if (!(alpha0 > 0.0)) throw domain_error("two-rate analysis requires alpha0 > 0");
  if (!(chi_low > 0.0 && chi_low < chi_high)) throw domain_error("two-rate analysis requires 0 < chi_low < chi_high");
  TwoRateAnalysis a;
  a.delta1 = std::max(0.0, alpha0 * std::exp(-chi_low) - 1.0);
  a.delta2 = 1.0 - alpha0 * std::exp(-chi_high);
  a.applicable = a.delta2 > 0.0;
  a.critical_high_probability = a.applicable ? a.delta1 / (a.delta1 + a.delta2) : 1.0;
  return a;
}

Verdict two_rate_verdict(double chi_low, double chi_high, double q_high, double alpha0) {
  if (!(q_high >= 0.0 && q_high <= 1.0)) throw domain_error("q_high must lie in [0,1]");
  const auto a = two_rate_analysis(chi_low, chi_high, alpha0);
  return a.applicable && q_high > a.critical_high_probability ? Verdict::inefficient : Verdict::inconclusive;
}

double survival_power(double chi, std::size_t n, std::size_t k) {
  const double base = 1.0 - chi / static_cast<double>(n);
  double value = 1.0;
  for (std::size_t i = 0; i < k; ++i) value *= base;
  return value;
}

std::size_t solve_ell(double chi_high, std::size_t n, double ratio) {
  if (n == 0 || !(chi_high > 0.0 && chi_high < static_cast<double>(n))) {
    throw domain_error("solve_ell requires 0 < chi_high < n");
  }
  if (!(ratio > 0.0 && ratio < 1.0)) throw domain_error("solve_ell requires 0 < ratio < 1");
  const double base = 1.0 - chi_high / static_cast<double>(n);
  constexpr std::size_t kMaxSteps = std::size_t{1} << 32;
  double value = 1.0;  // base^(ell - 1)
  for (std::size_t ell = 1; ell <= kMaxSteps; ++ell) {
    const double next = value * base;
    if (next < ratio) return ell;
    value = next;
  }
  throw domain_error("solve_ell: threshold not reached; chi_high / n too small");
}

double gamma_star(double sigma, double rho) {
  if (!(rho > 0.0)) throw domain_error("gamma* requires rho > 0");
  return 2.0 - (1.0 - sigma) / rho;
}

RateConstraintReport check_rate_constraints(double chi_low, double chi_high, std::size_t n, std::size_t mu,
                                            std::size_t lambda, double epsilon, std::optional<double> p) {
  if (n == 0 || mu == 0 || lambda == 0 || mu > lambda) throw domain_error("rate constraints need 1 <= mu <= lambda, n >= 1");
  if (!(chi_low > 0.0) || !(chi_high > 0.0) || !(epsilon >= 0.0)) throw domain_error("rate constraints need positive rates");
  RateConstraintReport r;
  r.ratio = static_cast<double>(mu) / static_cast<double>(lambda);
  r.low_lhs = r.ratio * (1.0 + epsilon);
  r.low_rhs = survival_power(chi_low, n, n);
  r.low_holds = r.low_lhs <= r.low_rhs;

  if (r.ratio < 1.0 && chi_high < static_cast<double>(n)) {
    r.ell = solve_ell(chi_high, n, r.ratio);
    r.ell_in_range = r.ell >= 1 && r.ell <= n;
  }
  if (p) {
    r.p = p;
    r.p_lhs = (1.0 + epsilon) * (1.0 - *p);
    r.p_rhs = 1.0 + *p * epsilon;
    r.p_holds = r.p_lhs >= r.p_rhs;
  }
  if (chi_high < static_cast<double>(n)) {
    r.ell_peak = solve_ell(chi_high, n, 85.0 / 171.0);
    try {
      r.default_m = default_peak_height(n, chi_high);
      r.ell_peak_exceeds_m = r.ell_peak > static_cast<std::size_t>(*r.default_m);
    } catch (const configuration_error&) {
      r.default_m.reset();
    }
  }
  r.psi = gamma_star(49.0 / 4950.0, 65.0 / 99.0);
  r.xi = gamma_star(3.0 / 20.0, 17.0 / 36.0);
  return r;
}

double beta(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw domain_error("beta requires gamma in [0,1]");
  return 2.0 * gamma * (1.0 - gamma / 2.0);
}

std::pair<double, double> survival_probs(std::size_t i, double chi_low, double chi_high, std::size_t n) {
  if (n == 0 || i > n) throw domain_error("survival_probs requires 0 <= i <= n");
  const auto nn = static_cast<double>(n);
  const auto ii = static_cast<double>(i);
  return {std::pow(1.0 - chi_low / nn, ii), std::pow(1.0 - chi_high / nn, ii)};
}

ExpBoundCheck exp_bound_check(double delta, double chi, std::size_t n) {
  ExpBoundCheck r;
  const auto nn = static_cast<double>(n);
  r.lower = (1.0 - delta) * std::exp(-chi);
  r.value = std::pow(1.0 - chi / nn, nn);
  r.upper = std::exp(-chi);
  r.precondition = delta > 0.0 && delta < 1.0 && chi > 0.0 && nn >= (chi + delta) * (chi / delta);
  r.holds = r.lower <= r.value && r.value <= r.upper;
  return r;
}

std::size_t exp_bound_min_n(double delta, double chi) {
  if (!(delta > 0.0 && delta < 1.0) || !(chi > 0.0)) throw domain_error("exp bound requires delta in (0,1), chi > 0");
  return static_cast<std::size_t>(std::ceil((chi + delta) * (chi / delta)));
}

double binomial_tail_bound(std::size_t lambda, double p, std::size_t k, double delta) {
  if (lambda == 0 || k == 0 || k > lambda) throw domain_error("binomial tail bound requires k in [1, lambda]");
  if (!(delta >= 0.0 && delta < 1.0)) throw domain_error("binomial tail bound requires delta in [0,1)");
  if (!(p >= 0.0 && p <= 1.0)) throw domain_error("binomial tail bound requires p in [0,1]");
  const double limit = static_cast<double>(k) * (1.0 - delta) / static_cast<double>(lambda);
  if (p > limit * (1.0 + 1e-12)) throw domain_error("binomial tail bound requires p <= (k/lambda)(1 - delta)");
  const auto kk = static_cast<double>(k);
  return std::exp(-kk * kk * delta * delta / (2.0 * static_cast<double>(lambda)));
}

}  // namespace saea::theory
