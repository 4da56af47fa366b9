#ifndef RAAG_ERRORS_HPP
#define RAAG_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace raag {

/// Raised for malformed input: unknown vertices, bad parameters, bad syntax.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact solver or a growth procedure exceeds its budget.
/// Callers must treat the partial work as unusable.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Node budget shared by the exponential solvers (clique, colouring,
/// induced-subgraph search).
struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
};

}  // namespace raag

#endif  // RAAG_ERRORS_HPP
