#pragma once

#include <stdexcept>
#include <string>

namespace tlir {

// Malformed input: unknown vertex ids, bad files, infeasible generator params.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The graph does not belong to the class an algorithm requires
// (non-cactus passed to the cactus colorer, K5 under the planar hypothesis, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A construction step that must succeed did not. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A search ran out of its node or time budget before reaching an answer.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantError(what);
}

}  // namespace tlir
