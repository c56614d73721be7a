#include "saea/fitness.hpp"

#include <cmath>

#include "saea/errors.hpp"

namespace saea {

int leading_ones(const Genome& x) { return static_cast<int>(x.leading_ones()); }

int one_max(const Genome& x) { return static_cast<int>(x.count_ones()); }

int peaked_fitness(const Genome& x, int m) {
  if (m < 1 || static_cast<std::size_t>(m) >= x.size()) throw configuration_error("f_m requires 1 <= m < n");
  return x.all_zero() ? m : leading_ones(x);
}

int default_peak_height(std::size_t n, double chi_high) {
  if (n < 2 || !(chi_high > 0.0)) throw configuration_error("default peak height needs n >= 2 and chi_high > 0");
  const double bound = std::log(171.0 / 85.0) * static_cast<double>(n - 1) / chi_high;
  const double m = std::floor(bound);
  if (m < 1.0 || m >= static_cast<double>(n)) {
    throw configuration_error("default peak height falls outside 1 <= m < n for this chi_high");
  }
  return static_cast<int>(m);
}

FitnessFunction::FitnessFunction(Kind kind, std::size_t n, int m) : kind_(kind), n_(n), m_(m) {
  if (n_ == 0) throw configuration_error("fitness: genome length must be positive");
}

FitnessFunction FitnessFunction::peaked(std::size_t n, int m) {
  if (m < 1 || static_cast<std::size_t>(m) >= n) throw configuration_error("f_m requires 1 <= m < n");
  return {Kind::peaked_leading_ones, n, m};
}

std::string FitnessFunction::name() const {
  switch (kind_) {
    case Kind::leading_ones:
      return "leading-ones";
    case Kind::one_max:
      return "one-max";
    case Kind::peaked_leading_ones:
      return "peaked";
  }
  return "unknown";
}

int FitnessFunction::operator()(const Genome& x) const {
  switch (kind_) {
    case Kind::leading_ones:
      return saea::leading_ones(x);
    case Kind::one_max:
      return saea::one_max(x);
    case Kind::peaked_leading_ones:
      return x.all_zero() ? m_ : saea::leading_ones(x);
  }
  return 0;
}

}  // namespace saea
