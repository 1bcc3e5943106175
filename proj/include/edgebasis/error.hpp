#pragma once

#include <stdexcept>
#include <string>

namespace edgebasis {

/// Raised when an argument violates an operation's precondition
/// (vertex out of range, walk not in the graph, malformed order, ...).
class InvalidInput : public std::invalid_argument {
public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a checked internal invariant fails. Seeing one is a bug.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace edgebasis
