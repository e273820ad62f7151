// Exception hierarchy for the fpint library.
//
// Everything derives from fpint::Error so callers can catch the whole
// family at once.  DomainError covers bad inputs detected up front;
// the numerical failures (NonConvergence, QuadratureFailure,
// FitIllConditioned) signal that an algorithm gave up at runtime.

#ifndef FPINT_ERRORS_HPP
#define FPINT_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace fpint {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition.
struct DomainError : Error {
  using Error::Error;
};

// Gamma-type function evaluated at a nonpositive integer.
struct PoleAtNonpositiveInteger : DomainError {
  using DomainError::DomainError;
};

// principal_power(0, e) with Re(e) <= 0.
struct ZeroToNonpositivePower : DomainError {
  using DomainError::DomainError;
};

// Parameter combination outside every implemented evaluation branch.
struct UnsupportedCase : DomainError {
  using DomainError::DomainError;
};

// Parameters that collapse a formula (vanishing Pochhammer denominator,
// coincident parameters, ...).
struct DegenerateParameters : DomainError {
  using DomainError::DomainError;
};

// A case-specific evaluator was invoked on parameters that classify
// into a different case.
struct WrongCase : DomainError {
  using DomainError::DomainError;
};

// A series or iteration hit its term cap before meeting tolerance.
struct NonConvergence : Error {
  using Error::Error;
};

// The adaptive quadrature engine could not meet its error target.
struct QuadratureFailure : Error {
  using Error::Error;
};

// The least-squares extraction of the finite part was too ill-conditioned
// to trust.
struct FitIllConditioned : Error {
  using Error::Error;
};

// One side of an identity check threw; remembers which side and why.
struct EvaluatorFailure : Error {
  std::string side;  // "lhs" or "rhs"
  EvaluatorFailure(std::string which, const std::string& what)
      : Error("evaluator failure on " + which + ": " + what),
        side(std::move(which)) {}
};

}  // namespace fpint

#endif  // FPINT_ERRORS_HPP
