#pragma once

#include <stdexcept>
#include <string>

namespace pi2 {

// Invalid input or violated precondition. The CLI reports these as domain
// errors (exit code 1).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration hit its configured size budget.
class BudgetExceeded : public DomainError {
 public:
  explicit BudgetExceeded(const std::string& what) : DomainError(what) {}
};

}  // namespace pi2
