#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nclandau {

enum class ErrorKind {
  InvalidArgument,
  DegenerateRepresentation,
  InadmissibleGauge,
  OutOfDomain,
  NonCanonicalForm,
  SingularMass,
  ZeroModeUnsupported,
  DynamicallyUnstable,
  NonBiquadratic,
  ConvergenceFailure,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateRepresentation: return "DegenerateRepresentation";
    case ErrorKind::InadmissibleGauge: return "InadmissibleGauge";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NonCanonicalForm: return "NonCanonicalForm";
    case ErrorKind::SingularMass: return "SingularMass";
    case ErrorKind::ZeroModeUnsupported: return "ZeroModeUnsupported";
    case ErrorKind::DynamicallyUnstable: return "DynamicallyUnstable";
    case ErrorKind::NonBiquadratic: return "NonBiquadratic";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
  }
  return "Unknown";
}

/// Base of every error raised by the library. `kind()` lets callers branch
/// without a cascade of catch clauses.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Complex normal-mode frequencies; carries the offending invariants.
class UnstableModes : public Error {
 public:
  UnstableModes(double S, double P, const std::string& what)
      : Error(ErrorKind::DynamicallyUnstable, what), S_(S), P_(P) {}

  double S() const noexcept { return S_; }
  double P() const noexcept { return P_; }

 private:
  double S_;
  double P_;
};

}  // namespace nclandau
