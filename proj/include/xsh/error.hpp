#pragma once

#include <stdexcept>
#include <string>

namespace xsh {

/// Precondition violated by the caller (bad index, size mismatch, wrong tag).
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text or JSON input.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data that parses but violates a mathematical invariant
/// (non-associative structure constants, missing unit, ...).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured resource guard.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal invariant broken; indicates a bug rather than bad input.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw argument_error(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw invariant_error(what);
}

}  // namespace detail
}  // namespace xsh
