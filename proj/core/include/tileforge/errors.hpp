#pragma once

#include <stdexcept>
#include <string>

namespace tileforge {

/// Broad outcome class of a failure. The CLI maps these onto exit codes.
enum class ErrorKind {
  usage,     // malformed input or violated precondition
  scope,     // input outside the supported class of matrices
  budget,    // configured size/magnitude budget exceeded
  internal,  // invariant violation; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class RankDeficientError : public Error {
 public:
  explicit RankDeficientError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class NoSolutionError : public Error {
 public:
  explicit NoSolutionError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class NotRationalSpectrum : public Error {
 public:
  explicit NotRationalSpectrum(const std::string& what) : Error(ErrorKind::scope, what) {}
};

class NotDilation : public Error {
 public:
  explicit NotDilation(const std::string& what) : Error(ErrorKind::scope, what) {}
};

/// A block digit set failed one of the cube-sandwich checks.
class CertificateFailure : public Error {
 public:
  CertificateFailure(std::string check, const std::string& what)
      : Error(ErrorKind::scope, what), check_(std::move(check)) {}
  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

class UnsupportedDimension : public Error {
 public:
  explicit UnsupportedDimension(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& what) : Error(ErrorKind::budget, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(ErrorKind::budget, what) {}
};

/// An intermediate coordinate left the signed 64-bit range used by the point kernels.
class CoordinateOverflow : public BudgetExceeded {
 public:
  explicit CoordinateOverflow(const std::string& what) : BudgetExceeded(what) {}
};

class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error(ErrorKind::internal, what) {}
};

}  // namespace tileforge
