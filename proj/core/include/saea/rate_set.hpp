#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace saea {

/// Ordered set M of mutation parameters chi. A rate chi means per-bit flip
/// probability chi / n. Rates are always referenced by index.
class RateSet {
 public:
  RateSet(std::vector<double> chis, std::size_t n);
  RateSet(std::initializer_list<double> chis, std::size_t n) : RateSet(std::vector<double>(chis), n) {}

  std::size_t size() const { return chis_.size(); }
  std::size_t genome_length() const { return n_; }
  double chi(std::size_t index) const { return chis_.at(index); }
  double flip_probability(std::size_t index) const { return chis_.at(index) / static_cast<double>(n_); }
  const std::vector<double>& chis() const { return chis_; }

  std::size_t low_index() const { return 0; }
  std::size_t high_index() const { return chis_.size() - 1; }
  bool valid_index(std::size_t index) const { return index < chis_.size(); }

 private:
  std::vector<double> chis_;
  std::size_t n_;
};

}  // namespace saea
