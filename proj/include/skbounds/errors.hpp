#pragma once

#include <stdexcept>
#include <string>

namespace skbounds {

/// Input exceeds one of the enumeration or representation caps.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An identity that theory guarantees failed to hold. Always a bug signal.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A graph-only quantity was requested for a source with a hyperedge of size != 2.
class NotAGraph : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace skbounds
