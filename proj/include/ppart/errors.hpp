#pragma once

#include <stdexcept>
#include <string>

namespace ppart {

/// Bad numeric parameters (k < 2, inconsistent scheme sizes, ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Chord set that is not a valid noncrossing partition.
struct InvalidPartition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (wrong region sizes,
/// improper input, ...).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

struct InvalidFlip : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Projected enumeration size exceeds the configured guard.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ppart
