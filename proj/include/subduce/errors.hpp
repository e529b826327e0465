#pragma once

#include <stdexcept>
#include <string>

namespace subduce {

/// Malformed or size-incompatible user input (partitions, tableaux, flags).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator index that does not name two entries of the tableau.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// g_{n1} applied to a split-basis object: not an element of S_{n1} x S_{n2}.
class UndefinedActionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numerical input that violates a precondition (empty basis, non-SPD form, ...).
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subduce
