// Gauss hypergeometric function 2F1 in the two regimes the library
// needs: the canonical series inside the unit disk, and expansions in
// powers of (1 - z) near the point z = 1, where the behavior is
// controlled by d = sigma - mu - nu:
//
//   * d not an integer: a pair of companion series, one regular and one
//     carrying the (1-z)^d branch factor;
//   * d a nonpositive or positive integer: the limit forms, in which one
//     series acquires log(1-z) and digamma terms and the other collapses
//     to a finite sum.
//
// Also provided: the Pfaff transform, a cosecant-weighted variant of the
// near-one connection (valid off the integer lattice, used to cross-check
// the main form), a closed form for 2F1(nu, 1; n; z) with integer n, and
// a finite binomial sum that reproduces Gamma(nu)/Gamma(nu-n+1) *
// 2F1(mu, nu; nu-n+1; z).

#ifndef FPINT_HYP2F1_HPP
#define FPINT_HYP2F1_HPP

#include "fpint/complex_ops.hpp"
#include "fpint/errors.hpp"
#include "fpint/series.hpp"

namespace fpint {

// Parameters of 2F1(mu, nu; sigma; z).  The constructor rejects a lower
// parameter sigma at a nonpositive integer (every term past a certain
// index would divide by zero).
struct Gauss2F1Params {
  ComplexScalar mu;
  ComplexScalar nu;
  ComplexScalar sigma;
  ComplexScalar z;
  Gauss2F1Params(ComplexScalar mu_, ComplexScalar nu_, ComplexScalar sigma_,
                 ComplexScalar z_, double int_tol = kIntegerTol);
};

// Canonical series sum_k (mu)_k (nu)_k / ((sigma)_k k!) z^k.
// Requires |z| <= 0.95 so the tail bound is honest.
SeriesResult gauss_series(const Gauss2F1Params& p,
                          double tol = kDefaultSeriesTol,
                          int max_terms = kDefaultMaxTerms);

// (1-z)^{-mu} * 2F1(mu, nu; sigma; z/(z-1)), evaluated by the canonical
// series at the mapped argument; equals 2F1(mu, sigma-nu; sigma; z).
// Requires |z/(z-1)| <= 0.95.
ComplexScalar pfaff_transform(const Gauss2F1Params& p,
                              double tol = kDefaultSeriesTol,
                              int max_terms = kDefaultMaxTerms);

// 2F1(mu, nu; sigma; z) evaluated through expansions in w = 1 - z,
// dispatching on the integer character of d = sigma - mu - nu (shared
// integer-detection tolerance; a d within kConditioningTol of an integer
// but outside the detection window records a conditioning warning).
// Requires |1-z| <= 0.9 and 1-z off the negative real axis.  At z = 1
// exactly, returns the limit value when Re(d) > 0 and throws DomainError
// otherwise.  Throws UnsupportedCase only if sigma itself is a
// nonpositive integer, DegenerateParameters when an integer mu or nu
// collapses the integer-d expansion.
SeriesResult gauss_2f1_near_one(const Gauss2F1Params& p,
                                double tol = kDefaultSeriesTol,
                                int max_terms = kDefaultMaxTerms,
                                double int_tol = kIntegerTol);

// Alternative route to the same value: a cosecant-weighted combination
// of one series in 1-z and one Pfaff-mapped series in (z-1)/z.  Valid
// only when sigma-mu and sigma-mu-nu are both away from the integers
// (DegenerateParameters otherwise); domain additionally requires
// |1-z| <= 0.95 and |(z-1)/z| <= 0.95.  Exists to cross-check
// gauss_2f1_near_one through an independent algebraic path.
SeriesResult gauss_2f1_near_one_csc_pair(const Gauss2F1Params& p,
                                         double tol = kDefaultSeriesTol,
                                         int max_terms = kDefaultMaxTerms,
                                         double int_tol = kIntegerTol);

// 2F1(nu, 1; n; z) for integer n >= 1 in closed form:
//   n = 1: (1-z)^{-nu};
//   n >= 2: (n-1)! / ((nu-n+1)_{n-1} z^{n-1}) *
//           [ (1-z)^{n-nu-1} - sum_{k=0}^{n-2} (nu-n+1)_k z^k / k! ]
// (the prefactor is the cancelled form of (nu-n)(n-1)!/(nu-n)_n, which
// keeps the removable point nu = n finite).  z = 0 with n >= 2 returns 1
// (the series limit; the closed form is a removable 0/0 there).  Small
// |z| reroutes through the canonical series because the bracket cancels
// to O(z^{n-1}).  Throws DegenerateParameters when (nu-n+1)_{n-1} = 0,
// i.e. integer nu in [1, n-1].
ComplexScalar gauss_2f1_nu1_n(ComplexScalar nu, long long n, ComplexScalar z,
                              double tol = kDefaultSeriesTol,
                              int max_terms = kDefaultMaxTerms);

// Finite sum
//   sum_{k=0}^{n-1} C(n-1,k) (mu)_k (nu-n+1+k)_{n-1-k} z^k / (1-z)^{k+mu},
// which equals Gamma(nu)/Gamma(nu-n+1) * 2F1(mu, nu; nu-n+1; z); the
// equality is exercised by the tests.  Requires n >= 1, |z| <= 0.95 and
// nu-n+1 off the nonpositive integers (where the companion form loses
// meaning).
ComplexScalar xxx12_sum(ComplexScalar mu, ComplexScalar nu, long long n,
                        ComplexScalar z, double int_tol = kIntegerTol);

}  // namespace fpint

#endif  // FPINT_HYP2F1_HPP
