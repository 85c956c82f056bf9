#pragma once

#include <stdexcept>
#include <string>

namespace ifscheck {

/// Bad caller input: malformed text, out-of-range parameters, invalid shapes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A full enumeration would exceed the configured cell cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computation routes disagreed. Always an implementation
/// bug, never a data error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The input violates a structural premise of the requested analysis
/// (e.g. the anchor segment is split across components).
class PremiseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ifscheck
