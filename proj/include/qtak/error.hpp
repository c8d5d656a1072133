#pragma once

#include <stdexcept>
#include <string>

namespace qtak {

// Base of every error the library throws. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (group spec strings, Cayley table files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arguments with mismatched shapes or degrees.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's domain (n <= 0, wrong group family, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Enumeration exceeded a configured cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t reached)
      : Error(what), reached_(reached) {}
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

class MembershipError : public Error {
 public:
  using Error::Error;
};

// A structural prediction about Takasaki quandles did not hold for a computed
// object. Carries the relation that failed.
class PredictionViolated : public Error {
 public:
  using Error::Error;
};

// Numerical verification (characters, projectors) failed.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace qtak
