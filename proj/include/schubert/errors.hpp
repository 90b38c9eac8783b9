#pragma once

#include <stdexcept>
#include <string>

#include "schubert/bigint.hpp"

namespace schubert {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A point set handed to canonicalize() is missing some β ≤ α for an α it contains.
class NotDownwardClosed : public Error {
 public:
  using Error::Error;
};

class NotTwoDim : public Error {
 public:
  NotTwoDim() : Error("operation is only defined for l = 2") {}
};

class EmptyUnion : public Error {
 public:
  EmptyUnion() : Error("operation is not defined for the empty union") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("inverse of zero in finite field") {}
};

/// h_U has a term above the Krull dimension of G(l,m); only reachable through corrupted input.
class ReciprocityViolation : public Error {
 public:
  using Error::Error;
};

/// Base of the errors raised when a configured resource guard would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class TooLarge : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

/// The subspace sweep would need `required` canonical forms, more than the budget allows.
class BudgetExceeded : public ResourceLimit {
 public:
  BudgetExceeded(BigInt required, BigInt budget)
      : ResourceLimit("oracle needs " + required.str() + " subspaces, budget is " + budget.str()),
        required_(std::move(required)),
        budget_(std::move(budget)) {}

  const BigInt& required() const noexcept { return required_; }
  const BigInt& budget() const noexcept { return budget_; }

 private:
  BigInt required_;
  BigInt budget_;
};

}  // namespace schubert
