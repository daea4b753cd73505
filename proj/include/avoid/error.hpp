#pragma once

#include <stdexcept>
#include <string>

namespace avoid {

/// Input outside an operation's domain (bad token, k < 1, p outside (0,1), ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on the structure of an argument was violated.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Work would exceed the configured enumeration or iteration budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace avoid
