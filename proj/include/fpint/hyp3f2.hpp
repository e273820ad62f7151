// Evaluators for the hypergeometric family 3F2(beta, nu, 1; beta+sigma, n; z)
// with integer n >= 1, via expansions in powers of (1 - z).
//
// The family has a Stieltjes-type integral representation whose kernel
// carries a finite-part-style splitting: a binomial moment expansion of the
// kernel produces a tabulated finite correction sum, while the singular
// remainder contributes hypergeometric pieces in (1 - z).  The shape of
// those pieces is decided by where sigma - nu sits relative to the integer
// lattice:
//
//   * sigma - nu not an integer: two Gauss-series factors in (1 - z),
//     weighted by csc(pi (sigma - nu));
//   * sigma - nu + n = m, a positive integer: a finite (1-z)^k sum plus a
//     logarithmic digamma series carrying log(1 - z);
//   * nu - sigma - n = m, a nonnegative integer: the mirror-image finite
//     sum and logarithmic series.
//
// Every transform returns the value of the 3F2 itself (the shared
// Gamma/Pochhammer prefactor is divided out), so results compare directly
// against the canonical series pfq_series.  The progenic pieces -- the
// individual finite-part integrals over [0, 1] from which the transforms
// are assembled -- are exposed separately so they can be validated against
// the definition-level epsilon-extraction oracle.

#ifndef FPINT_HYP3F2_HPP
#define FPINT_HYP3F2_HPP

#include <vector>

#include "fpint/complex_ops.hpp"
#include "fpint/errors.hpp"
#include "fpint/quadrature.hpp"
#include "fpint/series.hpp"

namespace fpint {

// Parameters of 3F2(beta, nu, 1; beta+sigma, n; z).  The constructor
// rejects: n < 1; nu on the integer lattice (the closed form of the inner
// Gauss factor collapses there); Re(sigma) <= 0; Re(beta + sigma - nu) <= 0
// (the representation integral would diverge at infinity); and beta + sigma
// at a nonpositive integer (the 3F2 itself is undefined).  The bound
// Re(beta) > n - 1 is *not* enforced here: it belongs to the integral path
// only, and the transform evaluators state their own (weaker) bounds.
struct ThreeF2Params {
  ComplexScalar beta;
  ComplexScalar nu;
  long long n = 1;
  ComplexScalar sigma;
  ComplexScalar z;
  ThreeF2Params(ComplexScalar beta_, ComplexScalar nu_, long long n_,
                ComplexScalar sigma_, ComplexScalar z_,
                double int_tol = kIntegerTol);
};

// Which integer regime sigma - nu occupies.  The integer offsets decide
// whether the singular remainder of the representation contributes Gauss
// factors (off-lattice) or logarithmic digamma series (on-lattice).
enum class ThreeF2Case {
  NonIntegerGap,    // sigma - nu off the integer lattice
  PolePositive,     // sigma - nu + n = m with m >= 1
  PoleNonpositive,  // nu - sigma - n = m with m >= 0
};

ThreeF2Case classify_sigma_nu_case(const ThreeF2Params& p,
                                   double int_tol = kIntegerTol);

// Canonical generalized hypergeometric series
//   pFq(upper; lower; z) = sum_k prod(upper)_k / prod(lower)_k z^k / k!.
// Requires p <= q+1, |z| <= 0.95 when p == q+1 (so the tail bound is
// honest), and no lower parameter at a nonpositive integer.  Serves as the
// reference oracle for every transform in this header.
SeriesResult pfq_series(const std::vector<ComplexScalar>& upper,
                        const std::vector<ComplexScalar>& lower,
                        ComplexScalar z, double tol = kDefaultSeriesTol,
                        int max_terms = kDefaultMaxTerms);

// 3F2(beta, nu, 1; beta+sigma, n; z) by direct quadrature of its integral
// representation
//   Gamma(beta+sigma)/(Gamma(beta) Gamma(sigma)) *
//     int_0^inf s^{beta-1} (s+1)^{-beta-sigma} 2F1(nu, 1; n; z s/(s+1)) ds,
// with the inner Gauss factor evaluated in closed form at each node.
// Requires real z with 0 <= z < 1 and Re(beta) > n - 1 (the integral path
// keeps the stricter bound so the quadrature stays an independent check).
ComplexScalar threef2_integral_direct(const ThreeF2Params& p,
                                      const QuadratureOptions& opts = {});

// The finite correction sum shared by all three transforms, re-expanded
// about z = 1:
//   sum_{l=0}^{n-2} (z-1)^l / l! *
//     sum_{k=l}^{n-2} (nu-n+1)_k Gamma(k-n+beta+1) /
//                     (Gamma(k-n+beta+sigma+1) (k-l)!).
// Empty (exact 0) for n = 1.  Algebraically equal to the power-form sum
// sum_{k=0}^{n-2} (nu-n+1)_k Gamma(k-n+beta+1) z^k /
// (Gamma(k-n+beta+sigma+1) k!), which the tests verify.
ComplexScalar threef2_finite_tail(const ThreeF2Params& p);

// Transform for sigma - nu off the integer lattice: two Gauss-series
// factors in (1 - z) with csc(pi (sigma - nu)) weights, minus the finite
// tail, divided by the family prefactor.  Requires |1-z| <= 0.9 and
// Re(beta) > n - 1.  Throws WrongCase when sigma - nu is an integer,
// UnsupportedCase when beta + sigma - nu is an integer (kernel exponent on
// the lattice; outside the implemented catalog).  A sigma - nu or
// beta + sigma - nu within the conditioning window of an integer records a
// warning: the cosecant weights lose digits there.
SeriesResult threef2_transform_general(const ThreeF2Params& p,
                                       double tol = kDefaultSeriesTol,
                                       int max_terms = kDefaultMaxTerms,
                                       double int_tol = kIntegerTol);

// Transform for sigma = m - n + nu with m a positive integer: a finite
// (1-z)^k sum plus a logarithmic digamma series in (1 - z), minus the
// finite tail, divided by the family prefactor.  The integer m is detected
// from sigma - nu + n and substituted exactly: all Pochhammer and Gamma
// arguments use nu + (m - n) in place of sigma.  Requires |1-z| <= 0.9;
// the convergence bound Re(beta) > n - m is already implied by the
// constructor (here beta + sigma - nu = beta + m - n).  Throws WrongCase
// when sigma - nu + n is not a positive integer, UnsupportedCase when beta
// is an integer (then beta + sigma - nu lands on the lattice too).
SeriesResult threef2_transform_pole_pos(const ThreeF2Params& p,
                                        double tol = kDefaultSeriesTol,
                                        int max_terms = kDefaultMaxTerms,
                                        double int_tol = kIntegerTol);

// Transform for sigma = nu - m - n with m a nonnegative integer: the
// mirror finite sum (now carrying (1-z)^{-m-1}) plus its logarithmic
// digamma series, minus the finite tail, divided by the family prefactor.
// The digamma offset inside the series is psi(k + m + 2); the neighboring
// reading psi(k + m + 1) fails the series oracle at O(1) and is rejected
// by the tests.  Requires |1-z| <= 0.9; the convergence bounds
// Re(nu) > m + n and Re(beta) > m + n are already implied by the
// constructor (here sigma = nu - m - n and beta + sigma - nu =
// beta - m - n).  Throws WrongCase when nu - sigma - n is not a
// nonnegative integer, UnsupportedCase when beta is an integer.
SeriesResult threef2_transform_pole_neg(const ThreeF2Params& p,
                                        double tol = kDefaultSeriesTol,
                                        int max_terms = kDefaultMaxTerms,
                                        double int_tol = kIntegerTol);

// The individual finite-part integrals over [0, 1] that restore the
// singular content of the representation; x = p.z must be real with
// 0 < x < 1, and S abbreviates 1/(1-x).
enum class ProgenicPieceKind {
  // FP int_0^1 s^{beta-n} (S-s)^{n-nu-1} (1-s)^{-(beta+sigma-nu)} ds for
  // sigma - nu off the lattice: a single Gauss factor in (1-x) weighted by
  // pi / sin(pi (beta+sigma-nu)).
  PlainBranch,
  // Same integrand times log(s), for sigma - nu + n = m >= 1: a finite
  // alternating sum (carrying the (-1)^n front factor that the sign tests
  // pin against the epsilon oracle) plus a digamma series with weight
  // pi / sin(pi beta).
  LogPolePositive,
  // Same integrand times log(s), for nu - sigma - n = m >= 0: a single
  // digamma series with front factor (-1)^{m+n} pi / sin(pi beta).
  LogPoleNonpositive,
};

ComplexScalar progenic_3f2_pieces(const ThreeF2Params& p,
                                  ProgenicPieceKind kind,
                                  double tol = kDefaultSeriesTol,
                                  int max_terms = kDefaultMaxTerms,
                                  double int_tol = kIntegerTol);

}  // namespace fpint

#endif  // FPINT_HYP3F2_HPP
