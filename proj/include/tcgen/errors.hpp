#pragma once

#include <stdexcept>
#include <string>

namespace tcgen {

// Value left the unit interval (or a denominator of zero was produced).
struct RangeError : std::domain_error {
  explicit RangeError(const std::string& what) : std::domain_error(what) {}
};

// Malformed rational text or spec document.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid construction: overlapping summands, generator coverage gaps,
// monotonicity violations, inconsistent pair/range data.
struct BuildError : std::invalid_argument {
  explicit BuildError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside an operation's declared domain (e.g. otimes off the range set).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Cross-checks that can only fail on an implementation bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tcgen
