#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A factor in a reciprocal position vanished (parameter equals q^k).
class PoleError : public Error {
 public:
  using Error::Error;
};

// Argument outside the region where the quantity is defined or converges.
class DomainError : public Error {
 public:
  using Error::Error;
};

// max_terms reached before the truncation rule was satisfied.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Operator series whose terms keep growing.
class DivergenceDetected : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

}  // namespace qseries
