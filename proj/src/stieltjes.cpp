#include "fpint/stieltjes.hpp"

#include <cmath>
#include <string>

#include "fpint/fpi_closed.hpp"
#include "fpint/gamma.hpp"
#include "fpint/hyp2f1.hpp"

namespace fpint {

namespace {

constexpr double kDomainSlack = 1e-12;
// Radius bound for the moment expansion; beyond this the geometric decay
// is too slow for the term cap.
constexpr double kSeriesRadius = 0.9;
// Radius bound for the auxiliary series inside the progenic evaluators.
constexpr double kAuxRadius = 0.95;

ComplexScalar cplx(double x) { return {x, 0.0}; }
ComplexScalar cplx(long long n) { return {static_cast<double>(n), 0.0}; }

void require_off_cut(ComplexScalar z, const char* what) {
  if (z == ComplexScalar(0.0, 0.0) ||
      (z.imag() == 0.0 && z.real() < 0.0)) {
    throw DomainError(std::string(what) +
                      " must lie off the closed negative real axis");
  }
}

// Integer value of nu - rho for the pole-origin cases.
long long origin_gap(ComplexScalar nu, ComplexScalar rho, double int_tol) {
  const auto q = detect_integer(nu - rho, int_tol);
  if (!q) {
    throw WrongCase(
        "pole-origin evaluator: nu - rho is not an integer here");
  }
  return *q;
}

}  // namespace

StieltjesGaussSpec::StieltjesGaussSpec(ComplexScalar a_, ComplexScalar b_,
                                       ComplexScalar mu_, ComplexScalar nu_,
                                       ComplexScalar rho_, double int_tol)
    : a(a_), b(b_), mu(mu_), nu(nu_), rho(rho_) {
  require_off_cut(a, "StieltjesGaussSpec: a");
  require_off_cut(b, "StieltjesGaussSpec: b");
  if (mu == ComplexScalar(0.0, 0.0)) {
    throw DomainError("StieltjesGaussSpec: mu must be nonzero");
  }
  if (!(nu.real() > 0.0)) {
    throw DomainError(
        "StieltjesGaussSpec: Re nu must be positive (origin integrability)");
  }
  if (!(rho.real() > 0.0)) {
    throw DomainError("StieltjesGaussSpec: Re rho must be positive");
  }
  if (const auto n = detect_integer(rho, int_tol); n && *n <= 0) {
    throw DomainError(
        "StieltjesGaussSpec: rho sits at a nonpositive integer");
  }
  if (!((mu + rho - nu).real() > 0.0)) {
    throw DomainError(
        "StieltjesGaussSpec: Re(mu + rho - nu) must be positive "
        "(decay at infinity)");
  }
}

CaseTag classify_case(ComplexScalar nu, ComplexScalar rho, double int_tol) {
  if (const auto n = detect_integer(rho, int_tol)) {
    if (*n <= 0) {
      throw DomainError("classify_case: rho sits at a nonpositive integer");
    }
    if (is_integer(nu, int_tol)) {
      throw UnsupportedCase(
          "classify_case: integer rho together with integer nu needs "
          "confluent limits outside the supported catalog");
    }
    return CaseTag::PoleKernel;
  }
  const auto q = detect_integer(nu - rho, int_tol);
  if (!q) return CaseTag::BranchBranch;
  return *q >= 1 ? CaseTag::PoleOriginPos : CaseTag::PoleOriginNeg;
}

CaseTag classify_case(const StieltjesGaussSpec& spec, double int_tol) {
  return classify_case(spec.nu, spec.rho, int_tol);
}

ComplexScalar stieltjes_direct(const StieltjesGaussSpec& spec,
                               const QuadratureOptions& opts) {
  if (spec.a.imag() != 0.0 || spec.b.imag() != 0.0 ||
      !(spec.a.real() > 0.0) || !(spec.b.real() > 0.0)) {
    throw DomainError(
        "stieltjes_direct: quadrature path requires real positive a and b");
  }
  const double a = spec.a.real();
  const double b = spec.b.real();
  const ComplexScalar mu = spec.mu;
  const ComplexScalar nu = spec.nu;
  const ComplexScalar rho = spec.rho;
  // The semi-infinite rule substitutes x = t/(1-t) internally and hands
  // back the exact distance to the origin, which carries the x^(nu-1)
  // singularity without cancellation.  The factors are combined in log
  // space: at the far nodes x^(nu-1) alone can overflow even though the
  // full integrand underflows to zero.
  auto f = [=](double x, double dist0) {
    const ComplexScalar lg = (nu - 1.0) * std::log(dist0) -
                             mu * std::log(a + x) - rho * std::log(b + x);
    return std::exp(lg);
  };
  return tanh_sinh_semi_infinite(f, 0.0, opts).value;
}

ComplexScalar fundamental_fpi_for_case(const StieltjesGaussSpec& spec,
                                       long long k, double int_tol) {
  if (k < 0) {
    throw DomainError("fundamental_fpi_for_case: k must be nonnegative");
  }
  switch (classify_case(spec, int_tol)) {
    case CaseTag::BranchBranch:
    case CaseTag::PoleKernel:
      // lambda = k + rho - nu + 1 stays off the integer lattice in both
      // cases, so the branch-family continuation applies verbatim.
      return fpi_branch(spec.a, spec.mu, cplx(k) + spec.rho - spec.nu + 1.0,
                        int_tol);
    case CaseTag::PoleOriginPos:
    case CaseTag::PoleOriginNeg: {
      const long long q = origin_gap(spec.nu, spec.rho, int_tol);
      if (k < q) {
        // Ordinary convergent moment: integral over (0, inf) of
        // x^(m-1) (a+x)^(-mu) dx with m = nu - rho - k >= 1.
        const ComplexScalar expo = cplx(k) + spec.mu - spec.nu + spec.rho;
        return GammaProd()
            .gamma(spec.nu - spec.rho - cplx(k))
            .gamma(expo)
            .rgamma(spec.mu)
            .power(spec.a, -expo)
            .value();
      }
      return fpi_pole(spec.a, spec.mu, k - q, int_tol);
    }
  }
  throw DomainError("fundamental_fpi_for_case: unreachable case tag");
}

ComplexScalar progenic_fpi_gauss(ComplexScalar a, ComplexScalar b,
                                 ComplexScalar mu, ComplexScalar nu,
                                 ComplexScalar rho, double tol, int max_terms,
                                 double int_tol) {
  require_off_cut(b, "progenic_fpi_gauss: b");
  if (!(nu.real() > 0.0)) {
    throw DomainError("progenic_fpi_gauss: Re nu must be positive");
  }
  if (is_integer(rho, int_tol)) {
    throw DomainError("progenic_fpi_gauss: rho must not be an integer");
  }
  if (is_integer(nu - rho, int_tol)) {
    throw DomainError(
        "progenic_fpi_gauss: integer nu - rho belongs to the log-weighted "
        "variant");
  }
  const ComplexScalar amb = a - b;
  if (amb == ComplexScalar(0.0, 0.0)) {
    throw DomainError("progenic_fpi_gauss: a and b must differ");
  }
  // 2F1(mu, 1-rho; nu-rho+1; b/(b-a)): pfaff_transform evaluates
  // F(mu, sigma-nu; sigma; z) through its mapped series at z/(z-1) = b/a,
  // so passing nu as the swap parameter makes sigma - nu = 1 - rho; the
  // transform enforces |b/a| <= 0.95 itself.
  const Gauss2F1Params p(mu, nu, nu - rho + 1.0, b / (b - a), int_tol);
  const ComplexScalar f = pfaff_transform(p, tol, max_terms);
  return GammaProd()
             .gamma(nu)
             .gamma(1.0 - rho)
             .rgamma(nu - rho + 1.0)
             .power(b, nu - rho)
             .power(amb, -mu)
             .value() *
         f;
}

ComplexScalar progenic_fpi_gauss(const StieltjesGaussSpec& spec, double tol,
                                 int max_terms, double int_tol) {
  if (classify_case(spec, int_tol) != CaseTag::BranchBranch) {
    throw WrongCase(
        "progenic_fpi_gauss: parameters do not classify as BranchBranch");
  }
  return progenic_fpi_gauss(spec.a, spec.b, spec.mu, spec.nu, spec.rho, tol,
                            max_terms, int_tol);
}

ComplexScalar progenic_fpi_gauss_log(ComplexScalar a, ComplexScalar b,
                                     ComplexScalar mu, ComplexScalar nu,
                                     ComplexScalar rho, double tol,
                                     int max_terms, double int_tol) {
  require_off_cut(a, "progenic_fpi_gauss_log: a");
  require_off_cut(b, "progenic_fpi_gauss_log: b");
  if (!(nu.real() > 0.0)) {
    throw DomainError("progenic_fpi_gauss_log: Re nu must be positive");
  }
  if (is_positive_integer(rho, int_tol)) {
    throw DomainError(
        "progenic_fpi_gauss_log: rho must not be a positive integer");
  }
  if (std::abs(b / a) > kAuxRadius + kDomainSlack) {
    throw DomainError("progenic_fpi_gauss_log: requires |b| <= 0.95 |a|");
  }
  const ComplexScalar lnb = std::log(b);
  const ComplexScalar z = b / a;
  // (mu)_k z^k / k! by recurrence; the beta-family factors supply the
  // k-th moment of (1-y)^(-rho) on (0,1), without and with ln y.
  auto term = [=, coeff = ComplexScalar(1.0, 0.0)](int k) mutable {
    if (k > 0) coeff *= (mu + cplx(k - 1LL)) * z / cplx(static_cast<long long>(k));
    const ComplexScalar sigma = nu + cplx(static_cast<long long>(k));
    return coeff * (lnb * beta_fpi(sigma, rho, int_tol) +
                    beta_fpi_log(sigma, rho, int_tol));
  };
  const SeriesResult sum = sum_series(term, tol, max_terms);
  return principal_power(b, nu - rho) * principal_power(a, -mu) * sum.value;
}

ComplexScalar progenic_fpi_gauss_log(const StieltjesGaussSpec& spec,
                                     double tol, int max_terms,
                                     double int_tol) {
  const CaseTag tag = classify_case(spec, int_tol);
  if (tag != CaseTag::PoleOriginPos && tag != CaseTag::PoleOriginNeg) {
    throw WrongCase(
        "progenic_fpi_gauss_log: parameters do not classify as a "
        "pole-origin case");
  }
  return progenic_fpi_gauss_log(spec.a, spec.b, spec.mu, spec.nu, spec.rho,
                                tol, max_terms, int_tol);
}

ComplexScalar residue_pole_kernel(ComplexScalar a, ComplexScalar b,
                                  ComplexScalar mu, ComplexScalar nu,
                                  long long n) {
  if (n < 1) {
    throw DomainError("residue_pole_kernel: kernel order n must be >= 1");
  }
  require_off_cut(b, "residue_pole_kernel: b");
  if (a == b) {
    throw DomainError("residue_pole_kernel: a and b must differ");
  }
  CompensatedSum x;
  for (long long k = 0; k < n; ++k) {
    x.add(binomial_complex(cplx(n - 1), k) * pochhammer(nu - cplx(k), k) *
          pochhammer(mu, n - 1 - k) *
          principal_power(b, nu - cplx(k) - 1.0) *
          principal_power(a - b, cplx(k) - mu - cplx(n) + 1.0));
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(ComplexScalar(0.0, kPi) * nu) *
         reciprocal_gamma(cplx(n)) * x.value();
}

ComplexScalar residue_pole_kernel(const StieltjesGaussSpec& spec,
                                  double int_tol) {
  if (classify_case(spec, int_tol) != CaseTag::PoleKernel) {
    throw WrongCase(
        "residue_pole_kernel: parameters do not classify as PoleKernel");
  }
  const long long n = *detect_integer(spec.rho, int_tol);
  return residue_pole_kernel(spec.a, spec.b, spec.mu, spec.nu, n);
}

SeriesResult stieltjes_fpi_series(const StieltjesGaussSpec& spec, double tol,
                                  int max_terms, double int_tol) {
  if (std::abs(spec.b / spec.a) > kSeriesRadius + kDomainSlack) {
    throw DomainError("stieltjes_fpi_series: requires |b/a| <= 0.9");
  }
  const CaseTag tag = classify_case(spec, int_tol);

  // Moment sum: C(-rho, k) b^k * (k-th finite-part moment), the weight by
  // the recurrence w_{k+1} = w_k * b * (-rho - k) / (k + 1).
  auto term = [&spec, int_tol,
               w = ComplexScalar(1.0, 0.0)](int k) mutable {
    if (k > 0) {
      w *= spec.b * (-spec.rho - cplx(static_cast<long long>(k - 1))) /
           cplx(static_cast<long long>(k));
    }
    return w * fundamental_fpi_for_case(spec, k, int_tol);
  };
  SeriesResult result = sum_series(term, tol, max_terms);

  ComplexScalar singular;
  switch (tag) {
    case CaseTag::BranchBranch:
      singular = sin_pi(spec.rho, int_tol) /
                 sin_pi(spec.rho - spec.nu, int_tol) *
                 progenic_fpi_gauss(spec.a, spec.b, spec.mu, spec.nu,
                                    spec.rho, tol, max_terms, int_tol);
      break;
    case CaseTag::PoleKernel: {
      // -2 pi i / (e^(2 pi i nu) - 1) times the residue, written in the
      // cancellation-free form -pi e^(-i pi nu) csc(pi nu).
      const ComplexScalar res = residue_pole_kernel(spec, int_tol);
      singular = -kPi * std::exp(ComplexScalar(0.0, -kPi) * spec.nu) /
                 sin_pi(spec.nu, int_tol) * res;
      break;
    }
    case CaseTag::PoleOriginPos:
    case CaseTag::PoleOriginNeg: {
      const long long q = origin_gap(spec.nu, spec.rho, int_tol);
      const double sign = (q % 2 == 0) ? -1.0 : 1.0;  // -(-1)^q
      singular = sign * sin_pi(spec.rho, int_tol) / kPi *
                 progenic_fpi_gauss_log(spec.a, spec.b, spec.mu, spec.nu,
                                        spec.rho, tol, max_terms, int_tol);
      break;
    }
  }
  result.value += singular;
  return result;
}

}  // namespace fpint
