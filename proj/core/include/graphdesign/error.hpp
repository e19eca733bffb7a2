#pragma once

#include <stdexcept>
#include <string>

namespace graphdesign {

// Base of every error thrown by the library. Subclasses identify the
// failure category so callers (and the CLI) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A rational value was required to be an integer (or to fit 64 bits) and was not.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

class NoThresholdError : public Error {
 public:
  using Error::Error;
};

// Computed data disagrees with itself: interpolation, row sums, double counting.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class MatchingError : public Error {
 public:
  using Error::Error;
};

// Reconstructed polynomials differ from the transcribed reference values.
class TranscriptionError : public Error {
 public:
  using Error::Error;
};

class UnavailableError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphdesign
