#pragma once

#include <stdexcept>
#include <string>

namespace galois {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arity, universe, or index mismatch between operands.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or closure would exceed its configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (for example asking
/// for a separator of an object that lies inside the closure).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace galois
