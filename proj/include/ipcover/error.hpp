#pragma once

#include <stdexcept>
#include <string>

namespace ipcover {

// Base of every error thrown by the library. Callers that only need to
// distinguish "bad input" from "bug" can catch InvalidInput / InternalError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InvalidPairing : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class RangeError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class FormatError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DisconnectedGraph : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class UnknownKey : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Path pool grew beyond its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A closed-form case analysis produced two different answers.
class FormulaConflict : public Error {
 public:
  using Error::Error;
};

// A constructed certificate failed its own post-condition.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ipcover
