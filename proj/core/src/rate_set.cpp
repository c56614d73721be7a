#include "saea/rate_set.hpp"

#include <cmath>

#include "saea/errors.hpp"

namespace saea {

RateSet::RateSet(std::vector<double> chis, std::size_t n) : chis_(std::move(chis)), n_(n) {
  if (n_ == 0) throw configuration_error("rate set: genome length must be positive");
  if (chis_.empty()) throw configuration_error("rate set must not be empty");
  for (std::size_t i = 0; i < chis_.size(); ++i) {
    const double chi = chis_[i];
    if (!std::isfinite(chi) || chi <= 0.0 || chi > static_cast<double>(n_)) {
      throw configuration_error("rate set: every chi must satisfy 0 < chi <= n");
    }
    if (i > 0 && !(chis_[i - 1] < chi)) throw configuration_error("rate set must be strictly increasing");
  }
}

}  // namespace saea
