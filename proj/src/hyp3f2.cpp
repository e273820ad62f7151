#include "fpint/hyp3f2.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "fpint/gamma.hpp"
#include "fpint/hyp2f1.hpp"
#include "fpint/warnings.hpp"

namespace fpint {

namespace {

// Radius bound for the (1-z) expansions; beyond this the geometric decay
// is too slow for the term cap.
constexpr double kOneMinusZRadius = 0.9;

ComplexScalar cplx(double x) { return {x, 0.0}; }
ComplexScalar cplx(long long n) { return {static_cast<double>(n), 0.0}; }

double factorial_ll(long long n) {
  double f = 1.0;
  for (long long i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

// Shared prefactor Gamma(beta) (nu-n+1)_{n-1} z^{n-1} /
// (Gamma(beta+sigma) (n-1)!) that multiplies the 3F2 on the expansion side;
// the transforms divide their assembled right-hand side by it.
ComplexScalar family_prefactor(ComplexScalar beta, ComplexScalar nu,
                               long long n, ComplexScalar sigma,
                               ComplexScalar z) {
  GammaProd g;
  g.gamma(beta).rgamma(beta + sigma).rgamma(cplx(n));
  g.factor(pochhammer(nu - cplx(n) + 1.0, n - 1));
  if (n > 1) g.power(z, cplx(n - 1));
  return g.value();
}

ComplexScalar finite_tail_impl(ComplexScalar beta, ComplexScalar nu,
                               long long n, ComplexScalar sigma,
                               ComplexScalar z) {
  CompensatedSum outer;
  for (long long l = 0; l + 2 <= n; ++l) {
    CompensatedSum inner;
    for (long long k = l; k + 2 <= n; ++k) {
      GammaProd g;
      g.gamma(cplx(k - n) + beta + 1.0)
          .rgamma(cplx(k - n) + beta + sigma + 1.0)
          .factor(pochhammer(nu - cplx(n) + 1.0, k))
          .divide(cplx(factorial_ll(k - l)));
      inner.add(g.value());
    }
    outer.add(inner.value() * principal_power(z - 1.0, cplx(l)) /
              cplx(factorial_ll(l)));
  }
  return outer.value();
}

void require_expansion_radius(ComplexScalar z) {
  const double w = std::abs(1.0 - z);
  if (w > kOneMinusZRadius) {
    throw DomainError(
        "threef2 transform: |1 - z| exceeds the expansion radius 0.9");
  }
  if (w == 0.0) {
    throw DomainError(
        "threef2 transform: z = 1 sits on the expansion point itself");
  }
}

void require_kernel_off_lattice(ComplexScalar beta, ComplexScalar sigma,
                                ComplexScalar nu, double int_tol) {
  if (is_integer(beta + sigma - nu, int_tol)) {
    throw UnsupportedCase(
        "threef2 transform: beta + sigma - nu on the integer lattice is "
        "outside the implemented catalog");
  }
  if (near_integer(beta + sigma - nu, kConditioningTol, int_tol)) {
    warn_conditioning("threef2: beta + sigma - nu near an integer",
                      distance_to_nearest_integer(beta + sigma - nu));
  }
}

// Positive-lattice offset m = sigma - nu + n, or WrongCase.
long long pole_pos_offset(const ThreeF2Params& p, double int_tol) {
  const auto d = detect_integer(p.sigma - p.nu, int_tol);
  if (!d || *d + p.n < 1) {
    throw WrongCase(
        "threef2_transform_pole_pos: sigma - nu + n is not a positive "
        "integer here");
  }
  return *d + p.n;
}

// Nonnegative-lattice offset m = nu - sigma - n, or WrongCase.
long long pole_neg_offset(const ThreeF2Params& p, double int_tol) {
  const auto d = detect_integer(p.nu - p.sigma, int_tol);
  if (!d || *d - p.n < 0) {
    throw WrongCase(
        "threef2_transform_pole_neg: nu - sigma - n is not a nonnegative "
        "integer here");
  }
  return *d - p.n;
}

void require_real_unit_interval(ComplexScalar z, const char* what) {
  if (z.imag() != 0.0 || !(z.real() > 0.0) || !(z.real() < 1.0)) {
    throw DomainError(std::string(what) +
                      ": argument must be real with 0 < x < 1");
  }
}

}  // namespace

ThreeF2Params::ThreeF2Params(ComplexScalar beta_, ComplexScalar nu_,
                             long long n_, ComplexScalar sigma_,
                             ComplexScalar z_, double int_tol)
    : beta(beta_), nu(nu_), n(n_), sigma(sigma_), z(z_) {
  if (n < 1) {
    throw DomainError("ThreeF2Params: n must be a positive integer");
  }
  if (is_integer(nu, int_tol)) {
    throw DegenerateParameters(
        "ThreeF2Params: integer nu collapses the inner Gauss factor");
  }
  if (!(sigma.real() > 0.0)) {
    throw DomainError("ThreeF2Params: Re sigma must be positive");
  }
  if (!((beta + sigma - nu).real() > 0.0)) {
    throw DomainError(
        "ThreeF2Params: Re(beta + sigma - nu) must be positive "
        "(decay of the representation kernel)");
  }
  if (is_nonpositive_integer(beta + sigma, int_tol)) {
    throw PoleAtNonpositiveInteger(
        "ThreeF2Params: lower parameter beta + sigma at a nonpositive "
        "integer");
  }
}

ThreeF2Case classify_sigma_nu_case(const ThreeF2Params& p, double int_tol) {
  const auto d = detect_integer(p.sigma - p.nu, int_tol);
  if (!d) return ThreeF2Case::NonIntegerGap;
  return (*d + p.n >= 1) ? ThreeF2Case::PolePositive
                         : ThreeF2Case::PoleNonpositive;
}

SeriesResult pfq_series(const std::vector<ComplexScalar>& upper,
                        const std::vector<ComplexScalar>& lower,
                        ComplexScalar z, double tol, int max_terms) {
  if (upper.size() > lower.size() + 1) {
    throw DomainError(
        "pfq_series: more than q+1 upper parameters diverges for z != 0");
  }
  for (const ComplexScalar& l : lower) {
    if (is_nonpositive_integer(l)) {
      throw PoleAtNonpositiveInteger(
          "pfq_series: lower parameter at a nonpositive integer");
    }
  }
  if (upper.size() == lower.size() + 1 && std::abs(z) > 0.95) {
    throw DomainError(
        "pfq_series: |z| > 0.95 with p = q+1 defeats the tail bound");
  }
  ComplexScalar term{1.0, 0.0};
  auto gen = [&, z](int k) mutable {
    if (k > 0) {
      const ComplexScalar kk = cplx(static_cast<long long>(k) - 1);
      ComplexScalar ratio = z / cplx(static_cast<long long>(k));
      for (const ComplexScalar& u : upper) ratio *= u + kk;
      for (const ComplexScalar& l : lower) ratio /= l + kk;
      term *= ratio;
    }
    return term;
  };
  return sum_series(gen, tol, max_terms);
}

ComplexScalar threef2_integral_direct(const ThreeF2Params& p,
                                      const QuadratureOptions& opts) {
  if (p.z.imag() != 0.0 || p.z.real() < 0.0 || !(p.z.real() < 1.0)) {
    throw DomainError(
        "threef2_integral_direct: z must be real with 0 <= z < 1");
  }
  if (!(p.beta.real() > static_cast<double>(p.n - 1))) {
    throw DomainError(
        "threef2_integral_direct: the integral path requires "
        "Re(beta) > n - 1");
  }
  const double z = p.z.real();
  const ComplexScalar beta = p.beta, sigma = p.sigma, nu = p.nu;
  const long long n = p.n;
  // s^{beta-1} (s+1)^{-beta-sigma} == u^{beta-1} (1+s)^{-sigma-1} with
  // u = s/(1+s); assembled in log space so neither factor over- or
  // underflows on the way through the far tanh-sinh nodes.
  auto f = [&](double x, double /*dist0*/) -> ComplexScalar {
    const double u = x / (1.0 + x);
    const ComplexScalar lg =
        (beta - 1.0) * std::log(u) - (sigma + 1.0) * std::log1p(x);
    return std::exp(lg) * gauss_2f1_nu1_n(nu, n, cplx(z * u));
  };
  const QuadratureResult q = tanh_sinh_semi_infinite(f, 0.0, opts);
  GammaProd g;
  g.gamma(beta + sigma).rgamma(beta).rgamma(sigma);
  return g.value() * q.value;
}

ComplexScalar threef2_finite_tail(const ThreeF2Params& p) {
  return finite_tail_impl(p.beta, p.nu, p.n, p.sigma, p.z);
}

SeriesResult threef2_transform_general(const ThreeF2Params& p, double tol,
                                       int max_terms, double int_tol) {
  const ComplexScalar d = p.sigma - p.nu;
  if (is_integer(d, int_tol)) {
    throw WrongCase(
        "threef2_transform_general: sigma - nu is an integer here");
  }
  require_kernel_off_lattice(p.beta, p.sigma, p.nu, int_tol);
  if (near_integer(d, kConditioningTol, int_tol)) {
    warn_conditioning("threef2_transform_general: sigma - nu near an integer",
                      distance_to_nearest_integer(d));
  }
  if (!(p.beta.real() > static_cast<double>(p.n - 1))) {
    throw DomainError(
        "threef2_transform_general: requires Re(beta) > n - 1");
  }
  require_expansion_radius(p.z);

  const ComplexScalar w = 1.0 - p.z;
  const ComplexScalar csc = kPi / sin_pi(d, int_tol);
  const double sign_n = (p.n % 2 == 0) ? 1.0 : -1.0;

  const Gauss2F1Params f1(p.sigma, p.beta + p.sigma - p.nu, d + cplx(p.n), w,
                          int_tol);
  const SeriesResult s1 = gauss_series(f1, tol, max_terms);
  GammaProd g1;
  g1.power(w, p.sigma + cplx(p.n) - p.nu - 1.0)
      .rgamma(1.0 + p.nu - cplx(p.n))
      .rgamma(d + cplx(p.n));
  const ComplexScalar t1 = sign_n * csc * g1.value() * s1.value;

  const Gauss2F1Params f2(1.0 + p.nu - cplx(p.n), p.beta - cplx(p.n) + 1.0,
                          2.0 - cplx(p.n) - d, w, int_tol);
  const SeriesResult s2 = gauss_series(f2, tol, max_terms);
  GammaProd g2;
  g2.gamma(p.beta - cplx(p.n) + 1.0)
      .rgamma(p.sigma)
      .rgamma(p.beta + p.sigma - p.nu)
      .rgamma(2.0 - cplx(p.n) - d);
  const ComplexScalar t2 = -sign_n * csc * g2.value() * s2.value;

  const ComplexScalar tail = threef2_finite_tail(p);
  const ComplexScalar pref =
      family_prefactor(p.beta, p.nu, p.n, p.sigma, p.z);

  SeriesResult out;
  out.value = (t1 + t2 - tail) / pref;
  out.terms_used = s1.terms_used + s2.terms_used;
  out.tail_estimate = std::max(s1.tail_estimate, s2.tail_estimate);
  out.converged = s1.converged && s2.converged;
  return out;
}

SeriesResult threef2_transform_pole_pos(const ThreeF2Params& p, double tol,
                                        int max_terms, double int_tol) {
  const long long m = pole_pos_offset(p, int_tol);
  if (is_integer(p.beta, int_tol)) {
    throw UnsupportedCase(
        "threef2_transform_pole_pos: integer beta puts the kernel exponent "
        "on the lattice; outside the implemented catalog");
  }
  if (near_integer(p.beta, kConditioningTol, int_tol)) {
    warn_conditioning("threef2_transform_pole_pos: beta near an integer",
                      distance_to_nearest_integer(p.beta));
  }
  // Re(beta) > n - m is already guaranteed: beta + sigma - nu = beta + m - n
  // here, and the constructor requires its real part positive.
  require_expansion_radius(p.z);

  // Exact-lattice substitution: sigma -> nu + (m - n) everywhere.
  const ComplexScalar sig = p.nu + cplx(m - p.n);
  const ComplexScalar a = p.beta + cplx(m - p.n);  // beta + sigma - nu
  const ComplexScalar w = 1.0 - p.z;

  CompensatedSum fin;
  for (long long k = 0; k + 2 <= m; ++k) {
    GammaProd g;
    g.gamma(cplx(k) + p.beta - cplx(p.n) + 1.0)
        .factor(pochhammer(1.0 + p.nu - cplx(p.n), k))
        .factor(cplx(factorial_ll(m - 2 - k)))
        .divide(cplx(factorial_ll(k)));
    ComplexScalar term = g.value() * principal_power(w, cplx(k));
    if (k % 2 == 1) term = -term;
    fin.add(term);
  }
  GammaProd gfin;
  gfin.rgamma(sig).rgamma(a);
  const ComplexScalar t1 = gfin.value() * fin.value();

  // Logarithmic digamma series: coefficients by term recurrence, psi
  // values by forward recurrence from the base arguments.
  const ComplexScalar logw = std::log(w);
  ComplexScalar coeff = cplx(1.0) / cplx(factorial_ll(m - 1));
  ComplexScalar psi_m = digamma(cplx(m), int_tol);
  ComplexScalar psi_sig = digamma(sig, int_tol);
  ComplexScalar psi_a = digamma(a, int_tol);
  ComplexScalar psi_1 = cplx(-kEulerGamma);
  auto gen = [&, w, logw](int ki) mutable {
    const long long k = ki;
    if (k > 0) {
      coeff *= (sig + cplx(k - 1)) * (a + cplx(k - 1)) * w /
               (cplx(k + m - 1) * cplx(k));
      psi_m += 1.0 / cplx(m + k - 1);
      psi_sig += 1.0 / (sig + cplx(k - 1));
      psi_a += 1.0 / (a + cplx(k - 1));
      psi_1 += 1.0 / cplx(k);
    }
    return coeff * (logw - psi_m + psi_sig + psi_a - psi_1);
  };
  const SeriesResult ser = sum_series(gen, tol, max_terms);
  GammaProd glog;
  glog.rgamma(p.nu - cplx(p.n) + 1.0);
  ComplexScalar t2 =
      glog.value() * principal_power(w, cplx(m - 1)) * ser.value;
  if (m % 2 == 1) t2 = -t2;

  const ComplexScalar tail = finite_tail_impl(p.beta, p.nu, p.n, sig, p.z);
  const ComplexScalar pref = family_prefactor(p.beta, p.nu, p.n, sig, p.z);

  SeriesResult out;
  out.value = (t1 + t2 - tail) / pref;
  out.terms_used = ser.terms_used;
  out.tail_estimate = ser.tail_estimate;
  out.converged = ser.converged;
  return out;
}

SeriesResult threef2_transform_pole_neg(const ThreeF2Params& p, double tol,
                                        int max_terms, double int_tol) {
  const long long m = pole_neg_offset(p, int_tol);
  if (is_integer(p.beta, int_tol)) {
    throw UnsupportedCase(
        "threef2_transform_pole_neg: integer beta puts the kernel exponent "
        "on the lattice; outside the implemented catalog");
  }
  if (near_integer(p.beta, kConditioningTol, int_tol)) {
    warn_conditioning("threef2_transform_pole_neg: beta near an integer",
                      distance_to_nearest_integer(p.beta));
  }
  // Re(nu) > m + n and Re(beta) > m + n are already guaranteed: here
  // sigma = nu - m - n and beta + sigma - nu = beta - m - n, and the
  // constructor requires both real parts positive.
  require_expansion_radius(p.z);

  // Exact-lattice substitution: sigma -> nu - m - n everywhere.
  const ComplexScalar sig = p.nu - cplx(m + p.n);
  const ComplexScalar bmn = p.beta - cplx(m + p.n);  // beta + sigma - nu
  const ComplexScalar w = 1.0 - p.z;

  CompensatedSum fin;
  for (long long k = 0; k <= m; ++k) {
    ComplexScalar term = pochhammer(bmn, k) * pochhammer(sig, k) *
                         cplx(factorial_ll(m - k)) *
                         principal_power(w, cplx(k)) /
                         cplx(factorial_ll(k));
    if (k % 2 == 1) term = -term;
    fin.add(term);
  }
  GammaProd gfin;
  gfin.power(w, cplx(-m - 1)).rgamma(1.0 - cplx(p.n) + p.nu);
  const ComplexScalar t1 = gfin.value() * fin.value();

  const ComplexScalar bn1 = p.beta - cplx(p.n) + 1.0;
  const ComplexScalar vn1 = p.nu + 1.0 - cplx(p.n);
  const ComplexScalar logw = std::log(w);
  ComplexScalar coeff = cplx(1.0) / cplx(factorial_ll(m + 1));
  ComplexScalar psi_1 = cplx(-kEulerGamma);
  ComplexScalar psi_v = digamma(vn1, int_tol);
  ComplexScalar psi_b = digamma(bn1, int_tol);
  ComplexScalar psi_m2 = digamma(cplx(m + 2), int_tol);
  auto gen = [&, w, logw](int ki) mutable {
    const long long k = ki;
    if (k > 0) {
      coeff *= (bn1 + cplx(k - 1)) * (vn1 + cplx(k - 1)) * w /
               (cplx(k + m + 1) * cplx(k));
      psi_1 += 1.0 / cplx(k);
      psi_v += 1.0 / (vn1 + cplx(k - 1));
      psi_b += 1.0 / (bn1 + cplx(k - 1));
      psi_m2 += 1.0 / cplx(m + 1 + k);
    }
    return coeff * (logw - psi_1 + psi_v + psi_b - psi_m2);
  };
  const SeriesResult ser = sum_series(gen, tol, max_terms);
  GammaProd glog;
  glog.gamma(bn1).rgamma(bmn).rgamma(sig);
  ComplexScalar t2 = glog.value() * ser.value;
  if (m % 2 == 1) t2 = -t2;

  const ComplexScalar tail = finite_tail_impl(p.beta, p.nu, p.n, sig, p.z);
  const ComplexScalar pref = family_prefactor(p.beta, p.nu, p.n, sig, p.z);

  SeriesResult out;
  out.value = (t1 + t2 - tail) / pref;
  out.terms_used = ser.terms_used;
  out.tail_estimate = ser.tail_estimate;
  out.converged = ser.converged;
  return out;
}

ComplexScalar progenic_3f2_pieces(const ThreeF2Params& p,
                                  ProgenicPieceKind kind, double tol,
                                  int max_terms, double int_tol) {
  require_real_unit_interval(p.z, "progenic_3f2_pieces");
  if (!(p.beta.real() > static_cast<double>(p.n - 1))) {
    throw DomainError("progenic_3f2_pieces: requires Re(beta) > n - 1");
  }
  const ComplexScalar w = 1.0 - p.z;  // 1 - x

  if (kind == ProgenicPieceKind::PlainBranch) {
    if (is_integer(p.sigma - p.nu, int_tol)) {
      throw WrongCase(
          "progenic_3f2_pieces: sigma - nu is an integer; the plain piece "
          "needs the off-lattice case");
    }
    require_kernel_off_lattice(p.beta, p.sigma, p.nu, int_tol);
    const ComplexScalar lam = p.beta + p.sigma - p.nu;
    const Gauss2F1Params f(1.0 + p.nu - cplx(p.n),
                           p.beta - cplx(p.n) + 1.0,
                           2.0 - cplx(p.n) - p.sigma + p.nu, w, int_tol);
    const SeriesResult s = gauss_series(f, tol, max_terms);
    GammaProd g;
    g.factor(cplx(kPi))
        .gamma(p.beta - cplx(p.n) + 1.0)
        .power(w, p.nu + 1.0 - cplx(p.n))
        .divide(sin_pi(lam, int_tol))
        .rgamma(lam)
        .rgamma(2.0 - cplx(p.n) - p.sigma + p.nu);
    return g.value() * s.value;
  }

  if (is_integer(p.beta, int_tol)) {
    throw UnsupportedCase(
        "progenic_3f2_pieces: integer beta is outside the implemented "
        "catalog for the logarithmic pieces");
  }
  const ComplexScalar sin_b = sin_pi(p.beta, int_tol);

  if (kind == ProgenicPieceKind::LogPolePositive) {
    const long long m = [&] {
      const auto d = detect_integer(p.sigma - p.nu, int_tol);
      if (!d || *d + p.n < 1) {
        throw WrongCase(
            "progenic_3f2_pieces: sigma - nu + n is not a positive integer; "
            "the log piece has the other lattice sign here");
      }
      return *d + p.n;
    }();
    const ComplexScalar sig = p.nu + cplx(m - p.n);
    const ComplexScalar a = p.beta + cplx(m - p.n);

    CompensatedSum fin;
    for (long long k = 0; k + 2 <= m; ++k) {
      GammaProd g;
      g.gamma(cplx(k) + p.beta - cplx(p.n) + 1.0)
          .factor(pochhammer(1.0 + p.nu - cplx(p.n), k))
          .factor(cplx(factorial_ll(m - 2 - k)))
          .divide(cplx(factorial_ll(k)));
      ComplexScalar term = g.value() * principal_power(w, cplx(k));
      if (k % 2 == 1) term = -term;
      fin.add(term);
    }
    GammaProd gfirst;
    gfirst.factor(cplx(kPi))
        .divide(sin_b)
        .rgamma(a)
        .power(w, p.nu + 1.0 - cplx(p.n));
    ComplexScalar first = gfirst.value() * fin.value();
    if (p.n % 2 == 1) first = -first;

    ComplexScalar coeff = cplx(1.0) / cplx(factorial_ll(m - 1));
    ComplexScalar psi_a = digamma(a, int_tol);
    ComplexScalar psi_1 = cplx(-kEulerGamma);
    auto gen = [&, w](int ki) mutable {
      const long long k = ki;
      if (k > 0) {
        coeff *= (sig + cplx(k - 1)) * (a + cplx(k - 1)) * w /
                 (cplx(k + m - 1) * cplx(k));
        psi_a += 1.0 / (a + cplx(k - 1));
        psi_1 += 1.0 / cplx(k);
      }
      return coeff * (psi_a - psi_1);
    };
    const SeriesResult ser = sum_series(gen, tol, max_terms);
    GammaProd gbase;
    gbase.factor(cplx(kPi))
        .divide(sin_b)
        .gamma(sig)
        .rgamma(1.0 + p.nu - cplx(p.n))
        .power(w, sig);
    ComplexScalar base = gbase.value() * ser.value;
    if ((m - p.n) % 2 != 0) base = -base;
    return first + base;
  }

  // LogPoleNonpositive
  const long long m = [&] {
    const auto d = detect_integer(p.nu - p.sigma, int_tol);
    if (!d || *d - p.n < 0) {
      throw WrongCase(
          "progenic_3f2_pieces: nu - sigma - n is not a nonnegative "
          "integer; the log piece has the other lattice sign here");
    }
    return *d - p.n;
  }();
  const ComplexScalar bmn = p.beta - cplx(m + p.n);  // beta + sigma - nu
  const ComplexScalar bn1 = p.beta - cplx(p.n) + 1.0;
  const ComplexScalar vn1 = p.nu + 1.0 - cplx(p.n);

  ComplexScalar coeff = cplx(1.0) / cplx(factorial_ll(m + 1));
  ComplexScalar psi_b = digamma(bn1, int_tol);
  ComplexScalar psi_m2 = digamma(cplx(m + 2), int_tol);
  auto gen = [&, w](int ki) mutable {
    const long long k = ki;
    if (k > 0) {
      coeff *= (vn1 + cplx(k - 1)) * (bn1 + cplx(k - 1)) * w /
               (cplx(k + m + 1) * cplx(k));
      psi_b += 1.0 / (bn1 + cplx(k - 1));
      psi_m2 += 1.0 / cplx(m + 1 + k);
    }
    return coeff * (psi_b - psi_m2);
  };
  const SeriesResult ser = sum_series(gen, tol, max_terms);
  GammaProd g;
  g.factor(cplx(kPi))
      .divide(sin_b)
      .gamma(bn1)
      .rgamma(bmn)
      .power(w, p.nu + 1.0 - cplx(p.n));
  ComplexScalar out = g.value() * ser.value;
  if ((m + p.n) % 2 != 0) out = -out;
  return out;
}

}  // namespace fpint
