// Double-exponential (tanh-sinh) quadrature for complex-valued integrands
// of a real variable, on finite intervals and on [a, infinity).
//
// Endpoint-singular integrands are first-class: the core engine hands the
// integrand its *distances to the two endpoints* instead of the abscissa,
// so an algebraic singularity at an endpoint can be evaluated without the
// cancellation that computing x and then x - a would cost.  Node distances
// reach ~1e-300 before the scheme stops extending.

#ifndef FPINT_QUADRATURE_HPP
#define FPINT_QUADRATURE_HPP

#include <functional>

#include "fpint/complex_ops.hpp"
#include "fpint/errors.hpp"

namespace fpint {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_levels = 11;  // step h = h0 / 2^level, h0 = 1/2
  double t_max = 6.5;   // tanh-sinh parameter range
};

struct QuadratureResult {
  ComplexScalar value{0.0, 0.0};
  double error_estimate = 0.0;  // level-to-level difference at acceptance
  int levels = 0;
  long long evaluations = 0;
};

// Integrand called as f(x - a, b - x); both arguments are > 0.
using DistanceIntegrand = std::function<ComplexScalar(double, double)>;

// Tanh-sinh rule on the finite interval (a, b).
QuadratureResult tanh_sinh_distances(const DistanceIntegrand& f, double a,
                                     double b,
                                     const QuadratureOptions& opts = {});

// Integrates f over [a, infinity) through the substitution x = a + t/(1-t);
// the integrand is called as f(x, x - a) with x - a computed stably.
QuadratureResult tanh_sinh_semi_infinite(
    const std::function<ComplexScalar(double, double)>& f, double a,
    const QuadratureOptions& opts = {});

// Which endpoints the caller knows to be singular.  The engine clusters
// nodes at both endpoints regardless; the hint only controls how hard it
// is acceptable to push toward an endpoint whose coordinate cannot be
// represented exactly.
enum class SingularHint { kNone, kLower, kUpper, kBoth };

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  bool upper_infinite = false;

  static Interval finite(double a, double b) { return {a, b, false}; }
  static Interval to_infinity(double a) { return {a, 0.0, true}; }
};

// Convenience front end for plain integrands f(x).  Near an endpoint e the
// abscissa is reconstructed as e +/- distance, which is exact when e == 0
// and correctly rounded otherwise.
QuadratureResult quadrature(const std::function<ComplexScalar(double)>& f,
                            const Interval& iv,
                            SingularHint hint = SingularHint::kNone,
                            const QuadratureOptions& opts = {});

}  // namespace fpint

#endif  // FPINT_QUADRATURE_HPP
