#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "saea/genome.hpp"

namespace saea {

/// Element (x, chi) of the extended search space. For strategies that carry
/// no per-individual rate the index records the last rate drawn for it.
struct Individual {
  Genome genome;
  std::uint32_t rate_index = 0;

  friend bool operator==(const Individual&, const Individual&) = default;
};

/// Vector of lambda individuals.
class Population {
 public:
  Population() = default;
  explicit Population(std::vector<Individual> members);

  std::size_t lambda() const { return members_.size(); }
  const Individual& operator[](std::size_t i) const { return members_[i]; }
  Individual& operator[](std::size_t i) { return members_[i]; }
  const std::vector<Individual>& members() const { return members_; }
  std::vector<Individual>& members() { return members_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::vector<Individual> members_;
};

/// |P cap A| for the set A given as a predicate.
std::size_t population_count_in(const Population& p, const std::function<bool(const Individual&)>& predicate);

}  // namespace saea
