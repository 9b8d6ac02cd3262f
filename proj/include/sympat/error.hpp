#pragma once

#include <stdexcept>
#include <string>

namespace sympat {

// Malformed input: a set, pattern, window or JSON object that violates the
// defining conditions of its type.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Requested size is beyond the configured enumeration limit.
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A consistency check that can only fail on a bug (parity mismatch,
// infeasible flow-up system, ...).
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace sympat
