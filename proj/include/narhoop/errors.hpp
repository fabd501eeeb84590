#ifndef NARHOOP_ERRORS_HPP
#define NARHOOP_ERRORS_HPP

#include <stdexcept>

namespace narhoop {

/// Malformed operation tables or model files.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an input outside its domain
/// (e.g. axiom U on a non-unital magma).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Bad command-line or task parameters: unknown class names, infeasible modes.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not. Always a bug somewhere.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A proven statement failed on a concrete model.
class TheoremViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace narhoop

#endif  // NARHOOP_ERRORS_HPP
