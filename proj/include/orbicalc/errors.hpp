#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orbicalc {

/// Base of every error the library raises on purpose. `kind()` is the
/// stable name reported by the CLI; `exit_status()` is 2 for bad input and 3
/// for a computation that could not be completed.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what, int exit_status)
      : std::runtime_error(what), kind_(std::move(kind)), exit_status_(exit_status) {}

  const std::string& kind() const noexcept { return kind_; }
  int exit_status() const noexcept { return exit_status_; }

 private:
  std::string kind_;
  int exit_status_;
};

/// Malformed input. `field()` is a JSON-pointer-like path to the offending
/// field when the error came from a document, empty otherwise.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, std::string field = {})
      : Error("ValidationError", what, 2), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ComputationError : public Error {
 public:
  ComputationError(std::string kind, const std::string& what) : Error(std::move(kind), what, 3) {}
};

#define ORBICALC_COMPUTATION_ERROR(Name)                                        \
  class Name : public ComputationError {                                        \
   public:                                                                      \
    explicit Name(const std::string& what) : ComputationError(#Name, what) {}   \
  }

ORBICALC_COMPUTATION_ERROR(ZeroInverse);
ORBICALC_COMPUTATION_ERROR(NotRational);
ORBICALC_COMPUTATION_ERROR(NotInvertible);
ORBICALC_COMPUTATION_ERROR(CommonBranch);
ORBICALC_COMPUTATION_ERROR(InexactSelfIntersection);
ORBICALC_COMPUTATION_ERROR(NonIntegralIndex);
ORBICALC_COMPUTATION_ERROR(UnsupportedGroup);
ORBICALC_COMPUTATION_ERROR(IncompleteDerivation);

#undef ORBICALC_COMPUTATION_ERROR

/// Leading orders that are not coprime: the branch is not embedded off 0.
class NotCoprime : public Error {
 public:
  explicit NotCoprime(const std::string& what) : Error("NotCoprime", what, 2) {}
};

}  // namespace orbicalc
