#pragma once

#include <stdexcept>
#include <string>

namespace isingcn {

/// Malformed input: wrong lengths, out-of-range indices, bad parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pulse frequency cannot be attributed to exactly one spin.
class AddressingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Norm bookkeeping drifted beyond tolerance during propagation.
class NumericalIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request exceeds a configured size cap (dense oracles).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace isingcn
