// Closed forms for Hadamard finite-part integrals of power-law kernels.
//
// The finite part of an integral whose integrand blows up at an endpoint
// is defined by cutting the integral off a distance eps from the
// singularity, expanding in eps, discarding every term that diverges as
// eps -> 0 (inverse powers and logarithms of eps), and keeping the limit
// of what remains.  For the kernels below the result has a closed form in
// Gamma functions.
//
// Three families:
//
//  * fpi_branch: integral over (0, inf) of (s+x)^(-upsilon) x^(-lambda),
//    lambda not an integer, so the origin singularity is a branch point.
//
//  * fpi_pole: same kernel with x^(-(n+1)), integer n >= 0; the expansion
//    around the cut now produces a log eps term, and a log s survives in
//    the finite part.
//
//  * beta_fpi / beta_fpi_log: integral over (0,1) of
//    y^(sigma-1) (1-y)^(-rho), without and with an extra ln y factor; the
//    singularity sits at the upper endpoint y = 1.

#ifndef FPINT_FPI_CLOSED_HPP
#define FPINT_FPI_CLOSED_HPP

#include "fpint/complex_ops.hpp"
#include "fpint/errors.hpp"

namespace fpint {

// Parameter bundle for the branch family; the constructor enforces
//   |arg s| < pi (s off the closed negative real axis),
//   upsilon != 0,
//   Re lambda > 0 and lambda not an integer,
//   Re(lambda + upsilon) > 1  (convergence at infinity).
struct FpiBranchSpec {
  ComplexScalar s;
  ComplexScalar upsilon;
  ComplexScalar lambda;
  FpiBranchSpec(ComplexScalar s_, ComplexScalar upsilon_,
                ComplexScalar lambda_, double int_tol = kIntegerTol);
};

// Pole family: integrand (s+x)^(-upsilon) x^(-(n+1)).  Enforces
// |arg s| < pi, upsilon != 0, n >= 0, Re(n + upsilon) > 0.
struct FpiPoleSpec {
  ComplexScalar s;
  ComplexScalar upsilon;
  long long n;
  FpiPoleSpec(ComplexScalar s_, ComplexScalar upsilon_, long long n_,
              double int_tol = kIntegerTol);
};

// Beta family on (0,1): integrand y^(sigma-1) (1-y)^(-rho).  Enforces
// Re sigma > 0, Re rho > 0, rho not a positive integer.
struct BetaFpiSpec {
  ComplexScalar sigma;
  ComplexScalar rho;
  BetaFpiSpec(ComplexScalar sigma_, ComplexScalar rho_,
              double int_tol = kIntegerTol);
};

// Branch family closed form, evaluated as
//   s^(1-lambda-upsilon) Gamma(1-lambda) Gamma(lambda+upsilon-1) /
//   Gamma(upsilon).
// This raw overload accepts the full analytic continuation in lambda
// (any non-integer lambda with Re(lambda+upsilon) > 1), which the series
// evaluators need for their leading, still-convergent terms.
ComplexScalar fpi_branch(ComplexScalar s, ComplexScalar upsilon,
                         ComplexScalar lambda, double int_tol = kIntegerTol);
ComplexScalar fpi_branch(const FpiBranchSpec& spec);

// Pole family closed form:
//   (-1)^n (upsilon)_n / (n! s^(n+upsilon)) *
//   (ln s + psi(n+1) - psi(n+upsilon)).
ComplexScalar fpi_pole(ComplexScalar s, ComplexScalar upsilon, long long n,
                       double int_tol = kIntegerTol);
ComplexScalar fpi_pole(const FpiPoleSpec& spec);

// Beta family closed form:
//   Gamma(1-rho) Gamma(sigma) / Gamma(sigma-rho+1),
// identically zero when sigma-rho is a negative integer.  The raw overload
// accepts any rho that is not a positive integer (Re rho <= 0 makes the
// integral an ordinary convergent one and the formula still holds).
ComplexScalar beta_fpi(ComplexScalar sigma, ComplexScalar rho,
                       double int_tol = kIntegerTol);
ComplexScalar beta_fpi(const BetaFpiSpec& spec);

// Same integrand with an extra ln y factor: the sigma-derivative of
// beta_fpi.  When sigma-rho+1 lands on a nonpositive integer the formula
// degenerates to a finite limit through psi(z)/Gamma(z); handled exactly.
ComplexScalar beta_fpi_log(ComplexScalar sigma, ComplexScalar rho,
                           double int_tol = kIntegerTol);
ComplexScalar beta_fpi_log(const BetaFpiSpec& spec);

}  // namespace fpint

#endif  // FPINT_FPI_CLOSED_HPP
