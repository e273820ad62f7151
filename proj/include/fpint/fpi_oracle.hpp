// Definition-level extraction of Hadamard finite parts.
//
// Given an integrand f(x) = x^(-lambda) g(x) (optionally times ln x) with
// g analytic at the origin, the finite part of the integral of f over
// (0, U) is obtained straight from the definition: compute the cut
// integrals I(eps) = integral over (eps, U) on a geometric grid of eps,
// then fit I(eps) against a dictionary of the powers (and logarithms) of
// eps that the expansion around the cut can produce, and read off the
// constant term.  Everything that diverges as eps -> 0 is reported as the
// dropped terms.
//
// This is deliberately independent of every closed form in the library:
// it only uses quadrature and a least-squares fit, so it can referee them.

#ifndef FPINT_FPI_ORACLE_HPP
#define FPINT_FPI_ORACLE_HPP

#include <functional>
#include <limits>
#include <vector>

#include "fpint/complex_ops.hpp"
#include "fpint/errors.hpp"
#include "fpint/quadrature.hpp"

namespace fpint {

// One term of the divergent part: coefficient * eps^exponent * (ln eps)^p.
struct DroppedTerm {
  ComplexScalar exponent{0.0, 0.0};
  int log_power = 0;
  ComplexScalar coefficient{0.0, 0.0};
};

struct OracleProblem {
  // The full integrand f(x), singular at the origin (for
  // extract_finite_part) or at x = upper_limit (for the _upper variant).
  std::function<ComplexScalar(double)> integrand;

  // Strength of the algebraic singularity: f behaves like
  // (distance)^(-lambda) times an analytic factor.  Re(lambda) > 0.
  ComplexScalar lambda{0.0, 0.0};

  // True when f carries an explicit ln(distance) factor on top of the
  // algebraic singularity.
  bool log_factor = false;

  // Upper end of integration; may be infinity for extract_finite_part,
  // must be finite for extract_finite_part_upper (it is the singular
  // point there).
  double upper_limit = std::numeric_limits<double>::infinity();

  // Optional Taylor coefficients g_0, g_1, ... of the analytic factor
  // g(x) = f(x) * x^lambda (/ ln x when log_factor) about the singular
  // point.  When enough of them are supplied, the divergent dictionary
  // coefficients are pinned analytically instead of fitted, which
  // improves the conditioning of the extraction; the fit then only
  // determines the finite part and the vanishing corrections.
  std::vector<ComplexScalar> taylor_coeffs;
};

struct OracleResult {
  ComplexScalar finite_part{0.0, 0.0};
  double error_estimate = 0.0;
  std::vector<DroppedTerm> dropped_terms;
};

// Finite part of the integral of f over (0, upper_limit) with the
// singularity at the origin.  eps0 is the coarsest cut, levels the number
// of geometric refinements (eps_j = eps0 * 2^-j).
OracleResult extract_finite_part(const OracleProblem& problem,
                                 double eps0 = 1e-2, int levels = 16);

// Finite part of the integral of f over (0, upper_limit) with the
// singularity at the *upper* endpoint: the problem is mirrored through
// x -> upper_limit - x and handed to extract_finite_part.  The integrand
// is evaluated through exact endpoint distances, so singular factors in
// (upper_limit - x) lose nothing to cancellation.
OracleResult extract_finite_part_upper(const OracleProblem& problem,
                                       double eps0 = 1e-2, int levels = 16);

}  // namespace fpint

#endif  // FPINT_FPI_ORACLE_HPP
