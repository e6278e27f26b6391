#pragma once

#include <stdexcept>
#include <string>

namespace plse {

/// Bad caller-supplied data: coordinates out of range, malformed sets, etc.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on a state that does not satisfy its contract,
/// e.g. inserting a node that is not free.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The QC generator hit dead ends on every retry.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive oracle was asked to handle an input above its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kMalformed, kDuplicateCell, kLatinViolation };

  ParseError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace plse
