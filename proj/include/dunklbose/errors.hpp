#ifndef DUNKLBOSE_ERRORS_HPP
#define DUNKLBOSE_ERRORS_HPP

#include <stdexcept>

namespace dunklbose {

// Argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested quantity has no finite value at the given argument.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The gas has no condensation transition (d <= 1), so the requested
// transition-relative quantity is undefined.
class NoTransitionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure could not certify the requested tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested branch does not apply at this temperature; the message
// names the branch the caller should use instead.
class PhaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dunklbose

#endif  // DUNKLBOSE_ERRORS_HPP
