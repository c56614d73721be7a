#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace saea::theory {

// ---------------------------------------------------------------------------
// Level-based upper bound.

struct LevelBasedParams {
  /// Number of levels m (the target is level m + 1).
  std::size_t m = 1;
  double z_star = 1.0;
  /// Per-level upgrade probabilities z_1..z_m; empty means z_j = z_star.
  std::vector<double> z;
  double delta = 1.0;
  double gamma0 = 0.5;
  /// Population size at which E[T] is evaluated.
  double lambda = 1.0;
};

struct LevelBasedBound {
  double a = 0.0;        ///< delta^2 gamma0 / (2 (1 + delta))
  double epsilon = 0.0;  ///< min(delta / 2, 1 / 2)
  double c = 0.0;        ///< epsilon^4 / 24
  /// (2/a) ln(16 m / (a c epsilon z_star)), and the least integer above it.
  double lambda_threshold_real = 0.0;
  std::uint64_t lambda_threshold = 0;
  bool population_condition_holds = false;
  double sum_inverse_z = 0.0;
  /// (2 / (c epsilon)) (m lambda (1 + ln(1 + c lambda)) + sum 1/z_j)
  double expected_time_bound = 0.0;
};

/// Throws domain_error for delta <= 0, gamma0 outside (0,1) or z outside (0,1].
LevelBasedBound level_based_bound(const LevelBasedParams& params);

// ---------------------------------------------------------------------------
// Negative drift with several mutation rates.

enum class Verdict { inefficient, inconclusive };
const char* to_string(Verdict v);

struct WeightedRate {
  double chi = 0.0;
  double q = 0.0;
};

struct DriftQuery {
  std::vector<WeightedRate> rates;
  /// Bound on the reproductive rate near the optimum.
  double alpha0 = 2.0;
  double delta = 0.01;
};

struct DriftReport {
  Verdict verdict = Verdict::inconclusive;
  double weighted_sum = 0.0;  ///< sum_j q_j exp(-chi_j)
  double threshold = 0.0;     ///< (1 - delta) / alpha0
  /// Largest delta for which the sum condition holds: 1 - alpha0 * sum.
  double margin = 0.0;
  double chi_max = 0.0;
};

/// "inefficient" iff sum_j q_j e^{-chi_j} <= (1 - delta) / alpha0 with
/// delta > 0. Never answers "efficient". Throws domain_error on invalid
/// weights (negative, or not summing to 1), alpha0 <= 0 or delta <= 0.
DriftReport drift_report(const DriftQuery& query);
Verdict drift_verdict(const DriftQuery& query);

/// Single-rate criterion: chi >= ln(alpha0) + delta for some delta > 0.
Verdict single_rate_verdict(double chi, double alpha0, double delta);

struct TwoRateAnalysis {
  /// Smallest admissible delta_1: chi_low >= ln(alpha0) - ln(1 + delta_1).
  double delta1 = 0.0;
  /// Largest admissible delta_2: chi_high >= ln(alpha0) - ln(1 - delta_2).
  double delta2 = 0.0;
  /// delta_1 / (delta_1 + delta_2); choosing chi_high more often than this
  /// by a constant factor makes the EA inefficient.
  double critical_high_probability = 0.0;
  bool applicable = false;  ///< delta_2 > 0, i.e. chi_high > ln(alpha0)
};

TwoRateAnalysis two_rate_analysis(double chi_low, double chi_high, double alpha0);
/// Inefficient iff the analysis applies and q_high > critical probability.
Verdict two_rate_verdict(double chi_low, double chi_high, double q_high, double alpha0);

// ---------------------------------------------------------------------------
// Rate-set construction.

/// (1 - chi/n)^k by k repeated multiplications. This is the evaluation used
/// to decide the ell sandwich, so re-substitution is exact.
double survival_power(double chi, std::size_t n, std::size_t k);

/// Unique ell >= 1 with (1 - chi_high/n)^ell < ratio <= (1 - chi_high/n)^(ell-1).
/// Requires 0 < chi_high < n and 0 < ratio < 1; throws domain_error otherwise.
std::size_t solve_ell(double chi_high, std::size_t n, double ratio);

/// gamma* = 2 - (1 - sigma) / rho from the escape lemma.
double gamma_star(double sigma, double rho);

struct RateConstraintReport {
  double ratio = 0.0;  ///< mu / lambda
  double low_lhs = 0.0;  ///< (mu/lambda)(1 + epsilon)
  double low_rhs = 0.0;  ///< (1 - chi_low/n)^n
  bool low_holds = false;
  std::size_t ell = 0;  ///< solve_ell(chi_high, n, mu/lambda)
  bool ell_in_range = false;  ///< 1 <= ell <= n
  std::optional<double> p;
  double p_lhs = 0.0;  ///< (1 + epsilon)(1 - p)
  double p_rhs = 0.0;  ///< 1 + p epsilon
  bool p_holds = false;

  // Constants of the f_m analysis (tournament size 2, 85/171 threshold).
  std::size_t ell_peak = 0;  ///< solve_ell(chi_high, n, 85/171)
  std::optional<int> default_m;
  bool ell_peak_exceeds_m = false;
  double psi = 0.0;  ///< gamma*(49/4950, 65/99) = 123/250
  double xi = 0.0;   ///< gamma*(3/20, 17/36) = 1/5
};

RateConstraintReport check_rate_constraints(double chi_low, double chi_high, std::size_t n, std::size_t mu,
                                            std::size_t lambda, double epsilon, std::optional<double> p = {});

// ---------------------------------------------------------------------------
// Small helpers.

/// Probability that a size-2 tournament (with replacement) picks one of the
/// gamma * lambda fittest: 2 gamma (1 - gamma / 2). gamma in [0, 1].
double beta(double gamma);

/// (q(i), r(i)) = ((1 - chi_low/n)^i, (1 - chi_high/n)^i).
std::pair<double, double> survival_probs(std::size_t i, double chi_low, double chi_high, std::size_t n);

struct ExpBoundCheck {
  double lower = 0.0;  ///< (1 - delta) e^{-chi}
  double value = 0.0;  ///< (1 - chi/n)^n
  double upper = 0.0;  ///< e^{-chi}
  bool precondition = false;  ///< n >= (chi + delta)(chi / delta)
  bool holds = false;
};

ExpBoundCheck exp_bound_check(double delta, double chi, std::size_t n);
/// Smallest integer n satisfying the lemma's precondition.
std::size_t exp_bound_min_n(double delta, double chi);

/// exp(-k^2 delta^2 / (2 lambda)), an upper bound on Pr[Bin(lambda, p) > k]
/// when p <= (k / lambda)(1 - delta). Throws domain_error outside k in
/// [1, lambda], delta in [0, 1) or when the p condition fails.
double binomial_tail_bound(std::size_t lambda, double p, std::size_t k, double delta);

}  // namespace saea::theory
