#pragma once

#include <cstddef>
#include <string>

#include "saea/genome.hpp"
#include "saea/population.hpp"

namespace saea {

int leading_ones(const Genome& x);
int one_max(const Genome& x);
/// f_m: m on the all-zeros peak, LeadingOnes everywhere else. Requires 1 <= m < n.
int peaked_fitness(const Genome& x, int m);

/// Largest peak height m with (1 - chi_high/n)^m >= 85/171 guaranteed, i.e.
/// floor(ln(171/85) (n - 1) / chi_high). Throws configuration_error when that
/// is not a valid height for length n.
int default_peak_height(std::size_t n, double chi_high);

class FitnessFunction {
 public:
  enum class Kind { leading_ones, one_max, peaked_leading_ones };

  static FitnessFunction leading_ones(std::size_t n) { return {Kind::leading_ones, n, 0}; }
  static FitnessFunction one_max(std::size_t n) { return {Kind::one_max, n, 0}; }
  static FitnessFunction peaked(std::size_t n, int m);

  Kind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  int peak_height() const { return m_; }
  std::string name() const;

  int operator()(const Genome& x) const;
  /// Value of the unique global optimum 1^n (n for all three functions).
  int optimum_value() const { return static_cast<int>(n_); }
  bool is_optimum(const Genome& x) const { return x.all_one(); }

 private:
  FitnessFunction(Kind kind, std::size_t n, int m);

  Kind kind_;
  std::size_t n_;
  int m_;
};

/// g((x, chi)) := f(x); the rate component never affects fitness.
inline int extended_fitness(const Individual& ind, const FitnessFunction& f) { return f(ind.genome); }

}  // namespace saea
