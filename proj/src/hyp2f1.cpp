#include "fpint/hyp2f1.hpp"

#include <cmath>
#include <functional>

#include "fpint/gamma.hpp"
#include "fpint/warnings.hpp"

namespace fpint {

namespace {

// Slack added to domain-radius comparisons so a value sitting exactly on
// the documented bound never trips the check through rounding.
constexpr double kDomainSlack = 1e-12;

// Largest integer gap d = sigma - mu - nu the log-expansion paths accept:
// beyond this the finite heads mix factorials that overflow double.
constexpr long long kMaxIntegerGap = 120;

ComplexScalar cplx(double x) { return ComplexScalar(x, 0.0); }
ComplexScalar cplx(long long n) {
  return ComplexScalar(static_cast<double>(n), 0.0);
}

// sum_k (u1)_k (u2)_k / ((q+1)_k k!) w^k
//       * (L + psi(k+1) + psi(k+q+1) - psi(k+p3) - psi(k+p4))
// with q >= 0 integer.  The digamma values advance by the forward
// recurrence psi(x+1) = psi(x) + 1/x, so the whole series costs four
// digamma evaluations total.
SeriesResult log_weighted_series(ComplexScalar u1, ComplexScalar u2,
                                 long long q, ComplexScalar p3,
                                 ComplexScalar p4, ComplexScalar w,
                                 ComplexScalar L, double tol, int max_terms) {
  const double qd = static_cast<double>(q);
  std::function<ComplexScalar(int)> term =
      [=, coeff = ComplexScalar(1.0, 0.0), psi1 = digamma(cplx(1.0)),
       psi2 = digamma(cplx(qd + 1.0)), psi3 = digamma(p3),
       psi4 = digamma(p4)](int k) mutable -> ComplexScalar {
    const ComplexScalar cur = coeff * (L + psi1 + psi2 - psi3 - psi4);
    const double kd = static_cast<double>(k);
    coeff *= (u1 + kd) * (u2 + kd) * w / ((qd + 1.0 + kd) * (kd + 1.0));
    psi1 += 1.0 / cplx(kd + 1.0);
    psi2 += 1.0 / cplx(qd + 1.0 + kd);
    psi3 += 1.0 / (p3 + kd);
    psi4 += 1.0 / (p4 + kd);
    return cur;
  };
  return sum_series(term, tol, max_terms);
}

// d = sigma - mu - nu not an integer: combine the regular series in w
// with the w^d branch series,
//   G(s)G(-d)/(G(mu)G(nu))      * w^d * F(sigma-nu, sigma-mu; d+1; w)
// + G(s)G(d)/(G(s-mu)G(s-nu))         * F(mu, nu; 1-d; w).
SeriesResult connection_noninteger(const Gauss2F1Params& p, ComplexScalar w,
                                   ComplexScalar d, double tol,
                                   int max_terms) {
  GammaProd branch_coef;
  branch_coef.gamma(p.sigma).gamma(-d).rgamma(p.mu).rgamma(p.nu);
  GammaProd regular_coef;
  regular_coef.gamma(p.sigma).gamma(d).rgamma(p.sigma - p.mu).rgamma(
      p.sigma - p.nu);

  CompensatedSum value;
  int terms = 0;
  double tail = 0.0;
  bool converged = true;

  if (!branch_coef.is_zero()) {
    const ComplexScalar coef =
        branch_coef.value() * principal_power(w, d);
    const Gauss2F1Params q(p.sigma - p.nu, p.sigma - p.mu, d + 1.0, w);
    const SeriesResult s = gauss_series(q, tol, max_terms);
    value.add(coef * s.value);
    terms += s.terms_used;
    tail += std::abs(coef) * s.tail_estimate;
    converged = converged && s.converged;
  }
  if (!regular_coef.is_zero()) {
    const ComplexScalar coef = regular_coef.value();
    const Gauss2F1Params q(p.mu, p.nu, 1.0 - d, w);
    const SeriesResult s = gauss_series(q, tol, max_terms);
    value.add(coef * s.value);
    terms += s.terms_used;
    tail += std::abs(coef) * s.tail_estimate;
    converged = converged && s.converged;
  }
  return {value.value(), terms, tail, converged};
}

// d = m >= 0 (sigma = mu + nu + m): finite head plus the log-weighted
// series.  m = 0 has an empty head and reduces to the pure log form.
SeriesResult connection_integer_nonneg(const Gauss2F1Params& p,
                                       ComplexScalar w, long long m,
                                       double tol, int max_terms) {
  GammaProd log_coef;
  log_coef.gamma(p.sigma).rgamma(p.mu).rgamma(p.nu).rgamma(cplx(m + 1));
  if (log_coef.is_zero()) {
    // An integer mu or nu turns the expansion into a 0 * (divergent
    // digamma series) limit this path does not take.
    throw DegenerateParameters(
        "gauss_2f1_near_one: integer mu or nu collapses the log expansion");
  }

  CompensatedSum value;
  int terms = 0;
  double tail = 0.0;

  if (m >= 1) {
    GammaProd head_coef;
    head_coef.gamma(p.sigma).rgamma(p.mu + cplx(m)).rgamma(p.nu + cplx(m));
    if (!head_coef.is_zero()) {
      // sum_{k=0}^{m-1} (mu)_k (nu)_k (m-1-k)! / k! * (-w)^k
      CompensatedSum head;
      ComplexScalar c(1.0, 0.0);
      double dec_fact = 1.0;  // (m-1-k)! built downward from (m-1)!
      for (long long j = 1; j < m; ++j) dec_fact *= static_cast<double>(j);
      for (long long k = 0; k < m; ++k) {
        head.add(c * dec_fact);
        const double kd = static_cast<double>(k);
        c *= (p.mu + kd) * (p.nu + kd) * (-w) / (kd + 1.0);
        if (k + 1 < m) dec_fact /= static_cast<double>(m - 1 - k);
      }
      value.add(head_coef.value() * head.value());
      terms += static_cast<int>(m);
    }
  }

  const ComplexScalar L = -std::log(w);
  const SeriesResult s =
      log_weighted_series(p.mu + cplx(m), p.nu + cplx(m), m, p.mu + cplx(m),
                          p.nu + cplx(m), w, L, tol, max_terms);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const ComplexScalar coef =
      sign * principal_power(w, cplx(m)) * log_coef.value();
  value.add(coef * s.value);
  terms += s.terms_used;
  tail += std::abs(coef) * s.tail_estimate;
  return {value.value(), terms, tail, s.converged};
}

// d = -n, n >= 1 (sigma = mu + nu - n): w^{-n} times a finite sum, plus
// the log-weighted series with unshifted upper parameters.
SeriesResult connection_integer_neg(const Gauss2F1Params& p, ComplexScalar w,
                                    long long n, double tol, int max_terms) {
  GammaProd log_coef;
  log_coef.gamma(p.sigma)
      .rgamma(p.mu - cplx(n))
      .rgamma(p.nu - cplx(n))
      .rgamma(cplx(n + 1));
  if (log_coef.is_zero()) {
    throw DegenerateParameters(
        "gauss_2f1_near_one: integer mu or nu collapses the log expansion");
  }

  CompensatedSum value;
  int terms = 0;
  double tail = 0.0;

  GammaProd head_coef;
  head_coef.gamma(p.sigma).gamma(cplx(n)).rgamma(p.mu).rgamma(p.nu);
  if (!head_coef.is_zero()) {
    // sum_{k=0}^{n-1} (nu-n)_k (mu-n)_k / ((1-n)_k k!) w^k; the (1-n)_k
    // factor is nonzero for every k <= n-1.
    CompensatedSum head;
    ComplexScalar c(1.0, 0.0);
    for (long long k = 0; k < n; ++k) {
      head.add(c);
      if (k + 1 < n) {
        const double kd = static_cast<double>(k);
        const double nd = static_cast<double>(n);
        c *= (p.nu - nd + kd) * (p.mu - nd + kd) * w /
             ((1.0 - nd + kd) * (kd + 1.0));
      }
    }
    value.add(head_coef.value() * principal_power(w, cplx(-n)) *
              head.value());
    terms += static_cast<int>(n);
  }

  const ComplexScalar L = -std::log(w);
  const SeriesResult s =
      log_weighted_series(p.mu, p.nu, n, p.mu, p.nu, w, L, tol, max_terms);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const ComplexScalar coef = sign * log_coef.value();
  value.add(coef * s.value);
  terms += s.terms_used;
  tail += std::abs(coef) * s.tail_estimate;
  return {value.value(), terms, tail, s.converged};
}

}  // namespace

Gauss2F1Params::Gauss2F1Params(ComplexScalar mu_, ComplexScalar nu_,
                               ComplexScalar sigma_, ComplexScalar z_,
                               double int_tol)
    : mu(mu_), nu(nu_), sigma(sigma_), z(z_) {
  if (is_nonpositive_integer(sigma, int_tol)) {
    throw UnsupportedCase(
        "Gauss2F1Params: lower parameter sigma at a nonpositive integer");
  }
}

SeriesResult gauss_series(const Gauss2F1Params& p, double tol,
                          int max_terms) {
  if (std::abs(p.z) > 0.95 + kDomainSlack) {
    throw DomainError("gauss_series: requires |z| <= 0.95");
  }
  std::function<ComplexScalar(int)> term =
      [p, t = ComplexScalar(1.0, 0.0)](int k) mutable -> ComplexScalar {
    const ComplexScalar cur = t;
    const double kd = static_cast<double>(k);
    t *= (p.mu + kd) * (p.nu + kd) * p.z / ((p.sigma + kd) * (kd + 1.0));
    return cur;
  };
  return sum_series(term, tol, max_terms);
}

ComplexScalar pfaff_transform(const Gauss2F1Params& p, double tol,
                              int max_terms) {
  if (p.z == ComplexScalar(1.0, 0.0)) {
    throw DomainError("pfaff_transform: z = 1 is outside the domain");
  }
  const ComplexScalar mapped = p.z / (p.z - 1.0);
  if (std::abs(mapped) > 0.95 + kDomainSlack) {
    throw DomainError("pfaff_transform: requires |z/(z-1)| <= 0.95");
  }
  const Gauss2F1Params q(p.mu, p.nu, p.sigma, mapped);
  return principal_power(1.0 - p.z, -p.mu) *
         gauss_series(q, tol, max_terms).value;
}

SeriesResult gauss_2f1_near_one(const Gauss2F1Params& p, double tol,
                                int max_terms, double int_tol) {
  const ComplexScalar w = 1.0 - p.z;
  if (std::abs(w) > 0.9 + kDomainSlack) {
    throw DomainError("gauss_2f1_near_one: requires |1 - z| <= 0.9");
  }
  if (w.imag() == 0.0 && w.real() < 0.0) {
    throw DomainError(
        "gauss_2f1_near_one: 1 - z lies on the negative real axis");
  }
  const ComplexScalar d = p.sigma - p.mu - p.nu;
  if (near_integer(d, kConditioningTol, int_tol)) {
    warn_conditioning(
        "gauss_2f1_near_one: sigma - mu - nu close to an integer",
        distance_to_nearest_integer(d));
  }
  if (w == ComplexScalar(0.0, 0.0)) {
    // z = 1 exactly: the function converges there only for Re(d) > 0,
    // with value Gamma(sigma)Gamma(d) / (Gamma(sigma-mu)Gamma(sigma-nu)).
    if (d.real() <= 0.0) {
      throw DomainError(
          "gauss_2f1_near_one: unbounded at z = 1 when Re(sigma-mu-nu) <= "
          "0");
    }
    GammaProd g;
    g.gamma(p.sigma).gamma(d).rgamma(p.sigma - p.mu).rgamma(p.sigma - p.nu);
    return {g.value(), 1, 0.0, true};
  }
  const auto gap = detect_integer(d, int_tol);
  if (!gap.has_value()) {
    return connection_noninteger(p, w, d, tol, max_terms);
  }
  if ((*gap >= 0 ? *gap : -*gap) > kMaxIntegerGap) {
    throw DomainError(
        "gauss_2f1_near_one: integer sigma-mu-nu too large for the "
        "log-expansion path");
  }
  if (*gap >= 0) {
    return connection_integer_nonneg(p, w, *gap, tol, max_terms);
  }
  return connection_integer_neg(p, w, -*gap, tol, max_terms);
}

SeriesResult gauss_2f1_near_one_csc_pair(const Gauss2F1Params& p, double tol,
                                         int max_terms, double int_tol) {
  const ComplexScalar w = 1.0 - p.z;
  const ComplexScalar rho = p.sigma - p.mu;
  if (is_integer(rho, int_tol) || is_integer(rho - p.nu, int_tol)) {
    throw DegenerateParameters(
        "gauss_2f1_near_one_csc_pair: needs sigma-mu and sigma-mu-nu away "
        "from the integers");
  }
  if (std::abs(w) > 0.95 + kDomainSlack) {
    throw DomainError("gauss_2f1_near_one_csc_pair: requires |1-z| <= 0.95");
  }
  if (p.z == ComplexScalar(0.0, 0.0)) {
    throw DomainError("gauss_2f1_near_one_csc_pair: z = 0 is outside the "
                      "domain of the Pfaff-mapped member");
  }
  const ComplexScalar mapped = (p.z - 1.0) / p.z;
  if (std::abs(mapped) > 0.95 + kDomainSlack) {
    throw DomainError(
        "gauss_2f1_near_one_csc_pair: requires |(z-1)/z| <= 0.95");
  }

  const ComplexScalar csc = 1.0 / sin_pi(rho - p.nu, int_tol);

  GammaProd branch_coef;  // weight of the w^{rho-nu} series
  branch_coef.gamma(p.sigma)
      .rgamma(p.nu)
      .rgamma(p.mu)
      .rgamma(rho - p.nu + 1.0)
      .factor(-kPi * csc);
  GammaProd mapped_coef;  // weight of the Pfaff-mapped series
  mapped_coef.gamma(p.sigma)
      .gamma(1.0 - rho)
      .rgamma(p.nu - rho + 1.0)
      .rgamma(p.mu - p.nu + rho)
      .factor(sin_pi(rho, int_tol) * csc)
      .power(p.z, -p.mu);

  CompensatedSum value;
  int terms = 0;
  double tail = 0.0;
  bool converged = true;

  if (!branch_coef.is_zero()) {
    const ComplexScalar coef =
        branch_coef.value() * principal_power(w, rho - p.nu);
    const Gauss2F1Params q(rho - p.nu + p.mu, rho, rho - p.nu + 1.0, w);
    const SeriesResult s = gauss_series(q, tol, max_terms);
    value.add(coef * s.value);
    terms += s.terms_used;
    tail += std::abs(coef) * s.tail_estimate;
    converged = converged && s.converged;
  }
  if (!mapped_coef.is_zero()) {
    const ComplexScalar coef = mapped_coef.value();
    const Gauss2F1Params q(p.mu, 1.0 - rho, p.nu - rho + 1.0, mapped);
    const SeriesResult s = gauss_series(q, tol, max_terms);
    value.add(coef * s.value);
    terms += s.terms_used;
    tail += std::abs(coef) * s.tail_estimate;
    converged = converged && s.converged;
  }
  return {value.value(), terms, tail, converged};
}

ComplexScalar gauss_2f1_nu1_n(ComplexScalar nu, long long n, ComplexScalar z,
                              double tol, int max_terms) {
  if (n < 1) throw DomainError("gauss_2f1_nu1_n: requires n >= 1");
  if (n == 1) return principal_power(1.0 - z, -nu);
  if (z == ComplexScalar(0.0, 0.0)) return ComplexScalar(1.0, 0.0);

  // The written prefactor (nu-n)(n-1)!/(nu-n)_n cancels its leading
  // factor to (n-1)!/(nu-n+1)_{n-1}, which keeps the removable point
  // nu = n finite; only integer nu in [1, n-1] genuinely degenerates.
  const auto nu_int = detect_integer(nu);
  if (nu_int.has_value() && *nu_int >= 1 && *nu_int <= n - 1) {
    throw DegenerateParameters(
        "gauss_2f1_nu1_n: (nu-n+1)_{n-1} vanishes for integer nu in "
        "[1, n-1]");
  }

  // The bracket below cancels to O(z^{n-1}); when that wipes out more
  // than ~2 digits, the canonical series is the accurate route.
  if (std::pow(std::abs(z), static_cast<double>(n - 1)) < 1e-2) {
    const Gauss2F1Params q(nu, cplx(1.0), cplx(n), z);
    return gauss_series(q, tol, max_terms).value;
  }

  CompensatedSum partial;
  ComplexScalar t(1.0, 0.0);
  for (long long k = 0; k + 2 <= n; ++k) {
    partial.add(t);
    const double kd = static_cast<double>(k);
    t *= (nu - cplx(n) + 1.0 + kd) * z / (kd + 1.0);
  }
  const ComplexScalar bracket =
      principal_power(1.0 - z, cplx(n) - nu - 1.0) - partial.value();

  GammaProd pref;
  pref.gamma(cplx(n))
      .divide(pochhammer(nu - cplx(n) + 1.0, n - 1))
      .power(z, cplx(-(n - 1)));
  return pref.value() * bracket;
}

ComplexScalar xxx12_sum(ComplexScalar mu, ComplexScalar nu, long long n,
                        ComplexScalar z, double int_tol) {
  if (n < 1) throw DomainError("xxx12_sum: requires n >= 1");
  if (std::abs(z) > 0.95 + kDomainSlack) {
    throw DomainError("xxx12_sum: requires |z| <= 0.95");
  }
  if (is_nonpositive_integer(nu - cplx(n) + 1.0, int_tol)) {
    throw DomainError(
        "xxx12_sum: nu-n+1 must not be a nonpositive integer");
  }
  const ComplexScalar inv = 1.0 / (1.0 - z);
  CompensatedSum acc;
  ComplexScalar zp(1.0, 0.0);                        // z^k
  ComplexScalar wp = principal_power(1.0 - z, -mu);  // (1-z)^{-(k+mu)}
  for (long long k = 0; k < n; ++k) {
    acc.add(binomial_complex(cplx(n - 1), k) * pochhammer(mu, k) *
            pochhammer(nu - cplx(n) + 1.0 + cplx(k), n - 1 - k) * zp * wp);
    zp *= z;
    wp *= inv;
  }
  return acc.value();
}

}  // namespace fpint
