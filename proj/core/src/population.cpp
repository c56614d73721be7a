#include "saea/population.hpp"

#include <algorithm>

#include "saea/errors.hpp"

namespace saea {

Population::Population(std::vector<Individual> members) : members_(std::move(members)) {
  if (members_.empty()) throw configuration_error("population must contain at least one individual");
  const std::size_t n = members_.front().genome.size();
  for (const auto& ind : members_) {
    if (ind.genome.size() != n) throw dimension_error("population members must share one genome length");
  }
}

std::size_t population_count_in(const Population& p, const std::function<bool(const Individual&)>& predicate) {
  return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), predicate));
}

}  // namespace saea
