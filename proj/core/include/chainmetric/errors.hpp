#pragma once

#include <stdexcept>
#include <string>

namespace chainmetric {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: out-of-range index, wrong table length, cyclic cover list,
// a set that fails a declared membership condition, and so on.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Structurally fine input on which the requested value does not exist:
// inverse of zero, diameter of an empty set, a threshold outside its range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive work would exceed the configured budget. The message names both
// the requested amount and the limit.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked outside its stated contract, e.g. a chain-only
// routine on a poset that is not a chain.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace chainmetric
