// Small complex-arithmetic utilities shared across the library:
// integer detection with tolerance, principal powers, and sin/cos of
// pi*z with exact argument reduction.

#ifndef FPINT_COMPLEX_OPS_HPP
#define FPINT_COMPLEX_OPS_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>

#include "fpint/errors.hpp"

namespace fpint {

using ComplexScalar = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;
// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// Default tolerance for deciding that a parameter sits *on* an integer.
// Configurable at call sites (the CLI exposes it as --int-tol).
inline constexpr double kIntegerTol = 1e-9;

// Distance within which a parameter is flagged as dangerously close to an
// integer without being treated as one (conditioning warnings).
inline constexpr double kConditioningTol = 1e-6;

// Nearest integer to z if z lies within tol of it (in both components),
// otherwise nullopt.
inline std::optional<long long> detect_integer(ComplexScalar z,
                                               double tol = kIntegerTol) {
  if (std::abs(z.imag()) > tol) return std::nullopt;
  const double r = std::round(z.real());
  if (std::abs(z.real() - r) > tol) return std::nullopt;
  return static_cast<long long>(r);
}

inline bool is_integer(ComplexScalar z, double tol = kIntegerTol) {
  return detect_integer(z, tol).has_value();
}

inline bool is_nonpositive_integer(ComplexScalar z, double tol = kIntegerTol) {
  const auto n = detect_integer(z, tol);
  return n.has_value() && *n <= 0;
}

inline bool is_positive_integer(ComplexScalar z, double tol = kIntegerTol) {
  const auto n = detect_integer(z, tol);
  return n.has_value() && *n >= 1;
}

// True when z is within `within` of some integer but not within `tol`:
// formulas with csc/Gamma factors lose digits there, so callers may want
// to surface a conditioning warning.
inline bool near_integer(ComplexScalar z, double within = kConditioningTol,
                         double tol = kIntegerTol) {
  if (std::abs(z.imag()) > within) return false;
  const double d = std::abs(z.real() - std::round(z.real()));
  return d <= within && !is_integer(z, tol);
}

// Euclidean distance from z to the nearest point of the integer lattice
// on the real axis (used to quantify conditioning warnings).
inline double distance_to_nearest_integer(ComplexScalar z) {
  return std::hypot(z.real() - std::round(z.real()), z.imag());
}

// sin(pi z) with the integer part of Re(z) reduced exactly:
// sin(pi (m + w)) = (-1)^m sin(pi w) with |Re w| <= 1/2.  Returns exact 0
// when z is within tol of an integer, which downstream reflection-formula
// code relies on.
inline ComplexScalar sin_pi(ComplexScalar z, double tol = kIntegerTol) {
  if (is_integer(z, tol)) return ComplexScalar(0.0, 0.0);
  const double m = std::round(z.real());
  const ComplexScalar w(z.real() - m, z.imag());
  ComplexScalar s = std::sin(kPi * w);
  // m is an exact double here (|m| < 2^52 in any sane use), so parity
  // via fmod is safe.
  if (std::fmod(std::abs(m), 2.0) >= 1.0) s = -s;
  return s;
}

// cos(pi z), same reduction: cos(pi (m + w)) = (-1)^m cos(pi w).
inline ComplexScalar cos_pi(ComplexScalar z) {
  const double m = std::round(z.real());
  const ComplexScalar w(z.real() - m, z.imag());
  ComplexScalar c = std::cos(kPi * w);
  if (std::fmod(std::abs(m), 2.0) >= 1.0) c = -c;
  return c;
}

// cot(pi z); pole at integers surfaces as a thrown error since every call
// site treats that as a parameter fault.
inline ComplexScalar cot_pi(ComplexScalar z, double tol = kIntegerTol) {
  if (is_integer(z, tol)) {
    throw PoleAtNonpositiveInteger("cot_pi: argument is an integer");
  }
  return cos_pi(z) / sin_pi(z, tol);
}

// Principal power base^expo = exp(expo * Log base) with Log the principal
// branch.  base == 0 is allowed only for Re(expo) > 0 (result 0).  Integer
// exponents of modest size take an exact multiplicative path so that e.g.
// (-2)^3 carries no spurious imaginary dust.
inline ComplexScalar principal_power(ComplexScalar base, ComplexScalar expo) {
  if (base == ComplexScalar(0.0, 0.0)) {
    if (expo.real() > 0.0) return ComplexScalar(0.0, 0.0);
    throw ZeroToNonpositivePower(
        "principal_power: 0 raised to exponent with Re <= 0");
  }
  if (expo.imag() == 0.0) {
    const double er = expo.real();
    const double rr = std::round(er);
    if (er == rr && std::abs(rr) <= 64.0) {
      // Exact integer exponent: repeated multiplication.
      ComplexScalar acc(1.0, 0.0);
      ComplexScalar b = base;
      long long n = static_cast<long long>(rr);
      const bool inv = n < 0;
      if (inv) n = -n;
      while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
      }
      return inv ? ComplexScalar(1.0, 0.0) / acc : acc;
    }
    if (base.imag() == 0.0 && base.real() > 0.0) {
      return ComplexScalar(std::pow(base.real(), er), 0.0);
    }
  }
  return std::exp(expo * std::log(base));
}

}  // namespace fpint

#endif  // FPINT_COMPLEX_OPS_HPP
