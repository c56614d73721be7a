#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace saea {

/// Linear-interpolation quantile of sorted data (the "type 7" rule:
/// position q * (size - 1)). Data must be non-empty and sorted ascending.
double quantile_sorted(std::span<const double> sorted, double q);

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Five-number summary plus mean; nullopt for empty input.
std::optional<Summary> summarize(std::vector<double> values);

}  // namespace saea
