// Gamma, digamma, Pochhammer and friends on the complex plane, plus a
// log-space accumulator for products of Gamma factors and powers.

#ifndef FPINT_GAMMA_HPP
#define FPINT_GAMMA_HPP

#include "fpint/complex_ops.hpp"
#include "fpint/errors.hpp"

namespace fpint {

// log Gamma(z) via the Lanczos approximation (g = 607/128, 15 terms) on the
// right half-plane, reflection formula on Re z < 1/2.  Throws
// PoleAtNonpositiveInteger at (tolerance-detected) nonpositive integers.
// The imaginary part follows the principal determination on the right
// half-plane; exp(log_gamma(z)) is always Gamma(z).
ComplexScalar log_gamma(ComplexScalar z, double int_tol = kIntegerTol);

// Gamma(z) = exp(log_gamma(z)).
ComplexScalar gamma(ComplexScalar z, double int_tol = kIntegerTol);

// 1 / Gamma(z), entire: returns exact 0 at detected nonpositive integers.
ComplexScalar reciprocal_gamma(ComplexScalar z, double int_tol = kIntegerTol);

// psi(z) = Gamma'(z)/Gamma(z): argument shifted up by the recurrence until
// the Bernoulli asymptotic series applies, reflection for Re z < 1/2.
// Throws PoleAtNonpositiveInteger at detected nonpositive integers.
ComplexScalar digamma(ComplexScalar z, double int_tol = kIntegerTol);

// lim_{z -> -n} psi(z)/Gamma(z) = (-1)^{n+1} n!  (n >= 0).  Both factors
// blow up at the pole but their ratio is finite; several finite-part
// formulas need exactly this combination.
double digamma_over_gamma_limit(long long n);

// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1), k >= 0, as a plain
// product; (a)_0 = 1.  Exact at negative-integer a (terminating factors
// give exact zeros).
ComplexScalar pochhammer(ComplexScalar a, long long k);

// Generalized binomial coefficient C(alpha, k) = (-1)^k (-alpha)_k / k!.
ComplexScalar binomial_complex(ComplexScalar alpha, long long k);

// Accumulates a product of Gamma factors, reciprocal Gammas, powers and
// plain scalars in log space, so quotients like Gamma(200.3)/Gamma(199.1)
// never overflow on the way through.  A reciprocal Gamma at a nonpositive
// integer flags the whole product as exactly zero.
class GammaProd {
 public:
  // multiply by Gamma(z); throws at nonpositive-integer z.
  GammaProd& gamma(ComplexScalar z);
  // divide by Gamma(z); a nonpositive-integer z zeroes the product.
  GammaProd& rgamma(ComplexScalar z);
  // multiply by base^expo (principal branch).
  GammaProd& power(ComplexScalar base, ComplexScalar expo);
  // multiply / divide by a plain factor.
  GammaProd& factor(ComplexScalar v);
  GammaProd& divide(ComplexScalar v);

  bool is_zero() const { return zero_; }
  ComplexScalar value() const;

 private:
  ComplexScalar log_{0.0, 0.0};
  bool zero_ = false;
};

}  // namespace fpint

#endif  // FPINT_GAMMA_HPP
