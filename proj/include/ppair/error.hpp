#pragma once

#include <stdexcept>
#include <string>

namespace ppair {

// Bad arguments or violated preconditions. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation was refused because it would exceed a configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ppair
