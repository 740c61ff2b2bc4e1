#pragma once

#include <stdexcept>
#include <string>

namespace arcv {

/// Caller violated an operation's precondition (bad sizes, bad indices, bad flags).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Attempt to invert something that is not a unit.
class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A truncated computation was asked for data beyond what its bounds certify.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int needed_order)
      : std::runtime_error(what), needed_order_(needed_order) {}
  int needed_order() const noexcept { return needed_order_; }

 private:
  int needed_order_;
};

}  // namespace arcv
