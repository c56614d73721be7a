#include "saea/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "saea/errors.hpp"

namespace saea {

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw domain_error("quantile of empty data");
  if (!(q >= 0.0 && q <= 1.0)) throw domain_error("quantile level must lie in [0, 1]");
  const double position = q * static_cast<double>(sorted.size() - 1);
  const auto lower = static_cast<std::size_t>(std::floor(position));
  const std::size_t upper = std::min(lower + 1, sorted.size() - 1);
  const double weight = position - static_cast<double>(lower);
  return sorted[lower] + weight * (sorted[upper] - sorted[lower]);
}

std::optional<Summary> summarize(std::vector<double> values) {
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());
  Summary s;
  s.count = values.size();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  s.min = values.front();
  s.max = values.back();
  s.q1 = quantile_sorted(values, 0.25);
  s.median = quantile_sorted(values, 0.5);
  s.q3 = quantile_sorted(values, 0.75);
  return s;
}

}  // namespace saea
