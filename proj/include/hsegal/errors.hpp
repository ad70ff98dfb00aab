#pragma once

#include <stdexcept>
#include <string>

namespace hsegal {

// Bad arguments to an operation (out-of-range index, malformed map).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent input data (tables, boundaries, files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation needs more simplices than the dimension bound provides.
class BoundError : public InputError {
 public:
  BoundError(const std::string& what, int needed)
      : InputError(what + " (needs dim_bound >= " + std::to_string(needed) + ")"), needed_(needed) {}
  int needed() const { return needed_; }

 private:
  int needed_;
};

// A documented precondition of a checker does not hold for the input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant broken; indicates a bug rather than bad input.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hsegal
