#pragma once

#include <stdexcept>
#include <string>

namespace smallgrp {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by table validation. Carries the first offending cell or triple,
// in the element numbering of the input table.
class NotAGroupError : public Error {
public:
  enum class Kind { Shape, LatinRow, LatinCol, Identity, Inverse, Associativity };

  Kind kind;
  int i = -1, j = -1, k = -1;

  NotAGroupError(Kind kind_, const std::string& msg, int i_ = -1, int j_ = -1, int k_ = -1)
      : Error(msg), kind(kind_), i(i_), j(j_), k(k_) {}
};

class ClosureTooLargeError : public Error {
public:
  using Error::Error;
};

class NotUnimodularError : public Error {
public:
  using Error::Error;
};

class EmptyInputError : public Error {
public:
  using Error::Error;
};

class NotNormalError : public Error {
public:
  using Error::Error;
};

class NotContainedError : public Error {
public:
  using Error::Error;
};

class OrderCapExceededError : public Error {
public:
  using Error::Error;
};

// Work estimate for an exact enumeration exceeds the caller's budget.
class BudgetExceededError : public Error {
public:
  using Error::Error;
};

// Backtracking search ran out of nodes. Distinct from a proven non-existence:
// callers must not treat this as "no isomorphism".
class SearchBudgetExceededError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

class UnknownNameError : public Error {
public:
  using Error::Error;
};

class InvalidInputError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace smallgrp
