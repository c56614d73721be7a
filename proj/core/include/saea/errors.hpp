#pragma once

#include <stdexcept>
#include <string>

namespace saea {

/// Invalid run or operator parameters (bad rate, bad m, empty rate set...).
class configuration_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two genomes of different length were combined.
class dimension_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A closed-form bound was evaluated outside the region where it is stated.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An object was queried before it reached the state the query requires.
class state_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace saea
