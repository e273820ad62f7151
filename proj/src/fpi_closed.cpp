#include "fpint/fpi_closed.hpp"

#include <cmath>

#include "fpint/gamma.hpp"
#include "fpint/warnings.hpp"

namespace fpint {

namespace {

void require_off_cut(ComplexScalar s, const char* who) {
  if (s == ComplexScalar(0.0, 0.0) ||
      (s.imag() == 0.0 && s.real() <= 0.0)) {
    throw DomainError(std::string(who) +
                      ": s must satisfy |arg s| < pi (off the closed "
                      "negative real axis)");
  }
}

// (upsilon)_n / n! as a running product, so large n neither overflows nor
// loses the exact zeros of a terminating Pochhammer.
ComplexScalar pochhammer_over_factorial(ComplexScalar upsilon, long long n) {
  ComplexScalar p(1.0, 0.0);
  for (long long j = 0; j < n; ++j) {
    p *= (upsilon + ComplexScalar(static_cast<double>(j), 0.0)) /
         ComplexScalar(static_cast<double>(j + 1), 0.0);
  }
  return p;
}

}  // namespace

FpiBranchSpec::FpiBranchSpec(ComplexScalar s_, ComplexScalar upsilon_,
                             ComplexScalar lambda_, double int_tol)
    : s(s_), upsilon(upsilon_), lambda(lambda_) {
  require_off_cut(s, "FpiBranchSpec");
  if (upsilon == ComplexScalar(0.0, 0.0)) {
    throw DomainError("FpiBranchSpec: upsilon must be nonzero");
  }
  if (lambda.real() <= 0.0) {
    throw DomainError("FpiBranchSpec: Re(lambda) must be positive");
  }
  if (is_integer(lambda, int_tol)) {
    throw DomainError(
        "FpiBranchSpec: integer lambda belongs to the pole family");
  }
  if ((lambda + upsilon).real() <= 1.0) {
    throw DomainError(
        "FpiBranchSpec: Re(lambda + upsilon) must exceed 1 for convergence "
        "at infinity");
  }
}

FpiPoleSpec::FpiPoleSpec(ComplexScalar s_, ComplexScalar upsilon_,
                         long long n_, double int_tol)
    : s(s_), upsilon(upsilon_), n(n_) {
  (void)int_tol;
  require_off_cut(s, "FpiPoleSpec");
  if (upsilon == ComplexScalar(0.0, 0.0)) {
    throw DomainError("FpiPoleSpec: upsilon must be nonzero");
  }
  if (n < 0) throw DomainError("FpiPoleSpec: n must be >= 0");
  if ((upsilon + ComplexScalar(static_cast<double>(n), 0.0)).real() <= 0.0) {
    throw DomainError("FpiPoleSpec: Re(n + upsilon) must be positive");
  }
}

BetaFpiSpec::BetaFpiSpec(ComplexScalar sigma_, ComplexScalar rho_,
                         double int_tol)
    : sigma(sigma_), rho(rho_) {
  if (sigma.real() <= 0.0) {
    throw DomainError("BetaFpiSpec: Re(sigma) must be positive");
  }
  if (rho.real() <= 0.0) {
    throw DomainError("BetaFpiSpec: Re(rho) must be positive");
  }
  if (is_positive_integer(rho, int_tol)) {
    throw DomainError("BetaFpiSpec: rho must not be a positive integer");
  }
}

ComplexScalar fpi_branch(ComplexScalar s, ComplexScalar upsilon,
                         ComplexScalar lambda, double int_tol) {
  require_off_cut(s, "fpi_branch");
  if (upsilon == ComplexScalar(0.0, 0.0)) {
    throw DomainError("fpi_branch: upsilon must be nonzero");
  }
  if (is_integer(lambda, int_tol)) {
    throw DomainError("fpi_branch: lambda must not be an integer");
  }
  if (near_integer(lambda, kConditioningTol, int_tol)) {
    // Gamma(1 - lambda) is near a pole: the value is finite but loses
    // roughly the digits of 1/distance.  Evaluate as written and note it.
    warn_conditioning("fpi_branch: lambda close to an integer",
                      distance_to_nearest_integer(lambda));
  }
  if ((lambda + upsilon).real() <= 1.0) {
    throw DomainError("fpi_branch: Re(lambda + upsilon) must exceed 1");
  }
  // pi Gamma(lambda+upsilon-1) / (s^(lambda+upsilon-1) sin(pi lambda)
  // Gamma(upsilon) Gamma(lambda)), written with the reflection formula as
  // s^(1-lambda-upsilon) Gamma(1-lambda) Gamma(lambda+upsilon-1) /
  // Gamma(upsilon): one fewer trigonometric factor and valid verbatim on
  // the Re(lambda) <= 0 continuation.
  const ComplexScalar one(1.0, 0.0);
  GammaProd p;
  p.power(s, one - lambda - upsilon)
      .gamma(one - lambda)
      .gamma(lambda + upsilon - one)
      .rgamma(upsilon);
  return p.value();
}

ComplexScalar fpi_branch(const FpiBranchSpec& spec) {
  return fpi_branch(spec.s, spec.upsilon, spec.lambda);
}

ComplexScalar fpi_pole(ComplexScalar s, ComplexScalar upsilon, long long n,
                       double int_tol) {
  require_off_cut(s, "fpi_pole");
  if (upsilon == ComplexScalar(0.0, 0.0)) {
    throw DomainError("fpi_pole: upsilon must be nonzero");
  }
  if (n < 0) throw DomainError("fpi_pole: n must be >= 0");
  const ComplexScalar npu =
      upsilon + ComplexScalar(static_cast<double>(n), 0.0);
  if (npu.real() <= 0.0) {
    throw DomainError("fpi_pole: Re(n + upsilon) must be positive");
  }
  ComplexScalar front = pochhammer_over_factorial(upsilon, n);
  if (n % 2 == 1) front = -front;
  if (front == ComplexScalar(0.0, 0.0)) return front;
  front *= principal_power(s, -npu);
  const ComplexScalar bracket =
      std::log(s) +
      digamma(ComplexScalar(static_cast<double>(n) + 1.0, 0.0), int_tol) -
      digamma(npu, int_tol);
  return front * bracket;
}

ComplexScalar fpi_pole(const FpiPoleSpec& spec) {
  return fpi_pole(spec.s, spec.upsilon, spec.n);
}

ComplexScalar beta_fpi(ComplexScalar sigma, ComplexScalar rho,
                       double int_tol) {
  if (sigma.real() <= 0.0) {
    throw DomainError("beta_fpi: Re(sigma) must be positive");
  }
  if (is_positive_integer(rho, int_tol)) {
    throw DomainError("beta_fpi: rho must not be a positive integer");
  }
  // Gamma(1-rho) Gamma(sigma) / Gamma(sigma-rho+1); the reciprocal Gamma
  // supplies the exact zero whenever sigma-rho is a negative integer.
  const ComplexScalar one(1.0, 0.0);
  const ComplexScalar w = sigma - rho + one;
  if (is_nonpositive_integer(w, int_tol)) return {0.0, 0.0};
  GammaProd p;
  p.gamma(one - rho).gamma(sigma).rgamma(w);
  return p.value();
}

ComplexScalar beta_fpi(const BetaFpiSpec& spec) {
  return beta_fpi(spec.sigma, spec.rho);
}

ComplexScalar beta_fpi_log(ComplexScalar sigma, ComplexScalar rho,
                           double int_tol) {
  if (sigma.real() <= 0.0) {
    throw DomainError("beta_fpi_log: Re(sigma) must be positive");
  }
  if (is_positive_integer(rho, int_tol)) {
    throw DomainError("beta_fpi_log: rho must not be a positive integer");
  }
  const ComplexScalar one(1.0, 0.0);
  const ComplexScalar w = sigma - rho + one;
  const auto w_int = detect_integer(w, int_tol);
  if (w_int.has_value() && *w_int <= 0) {
    // sigma-derivative of the closed form when 1/Gamma(w) vanishes: only
    // the -psi(w)/Gamma(w) piece survives, through its finite limit
    // (-1)^(m+1) m! at w = -m.
    const long long m = -*w_int;
    GammaProd p;
    p.gamma(one - rho).gamma(sigma);
    return -digamma_over_gamma_limit(m) * p.value();
  }
  GammaProd p;
  p.gamma(one - rho).gamma(sigma).rgamma(w);
  return p.value() * (digamma(sigma, int_tol) - digamma(w, int_tol));
}

ComplexScalar beta_fpi_log(const BetaFpiSpec& spec) {
  return beta_fpi_log(spec.sigma, spec.rho);
}

}  // namespace fpint
