#include "fpint/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fpint/complex_ops.hpp"
#include "fpint/errors.hpp"
#include "fpint/fpi_closed.hpp"
#include "fpint/fpi_oracle.hpp"
#include "fpint/gamma.hpp"
#include "fpint/hyp2f1.hpp"
#include "fpint/hyp3f2.hpp"
#include "fpint/quadrature.hpp"
#include "fpint/rng.hpp"
#include "fpint/series.hpp"
#include "fpint/stieltjes.hpp"

namespace fpint {
namespace {

ComplexScalar cplx(double re) { return ComplexScalar(re, 0.0); }

const ComplexScalar kOne(1.0, 0.0);

void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError("verify: " + what);
}

double dint(ComplexScalar v) { return distance_to_nearest_integer(v); }
double dint(double v) { return distance_to_nearest_integer(cplx(v)); }

double factorial_d(long long n) {
  double f = 1.0;
  for (long long j = 2; j <= n; ++j) f *= static_cast<double>(j);
  return f;
}

// (-1)^n, safe for negative n.
double parity_sign(long long n) {
  return (((n % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
}

// Real-valued parameter lookup for routes (quadrature, direct integration)
// that are only wired for the real axis.
double real_at(const ParamRecord& p, std::string_view name) {
  const ComplexScalar v = p.at(name);
  require(std::abs(v.imag()) <= 1e-12,
          std::string(name) + " must be real for this equation");
  return v.real();
}

double real_unit_arg(ComplexScalar z) {
  require(std::abs(z.imag()) <= 1e-12 && z.real() > 0.0 && z.real() < 1.0,
          "argument z must be real in (0, 1)");
  return z.real();
}

// Most two-sided Gauss checks evaluate one series at z and one at 1 - z.
void require_two_sided_arg(ComplexScalar z, double near_one_radius = 0.95) {
  require(std::abs(z) <= 0.95, "argument z must satisfy |z| <= 0.95");
  require(std::abs(kOne - z) <= near_one_radius,
          "argument z must keep 1 - z inside the series range");
}

// Sum over k >= 0 of coeff_k * (base + sum_i sign_i psi(arg_i + k)) where
// coeff_{k+1} = coeff_k (u1 + k)(u2 + k) w / ((l1 + k)(1 + k)).  The four
// digamma slots update by the recurrence psi(a + k + 1) = psi(a + k) +
// 1/(a + k); a slot with sign 0 is inert.  This is the shape shared by all
// logarithmic companion series in the catalog.
using PsiSlots = std::array<std::pair<double, ComplexScalar>, 4>;

ComplexScalar psi_weighted_series(ComplexScalar coeff0, ComplexScalar u1,
                                  ComplexScalar u2, ComplexScalar l1,
                                  ComplexScalar w, ComplexScalar base,
                                  const PsiSlots& slots,
                                  double tol = kDefaultSeriesTol,
                                  int max_terms = kDefaultMaxTerms) {
  std::array<ComplexScalar, 4> psi{};
  for (int i = 0; i < 4; ++i) {
    if (slots[i].first != 0.0) psi[i] = digamma(slots[i].second);
  }
  std::function<ComplexScalar(int)> term =
      [=, coeff = coeff0](int k) mutable -> ComplexScalar {
    ComplexScalar bracket = base;
    for (int i = 0; i < 4; ++i) {
      if (slots[i].first != 0.0) bracket += slots[i].first * psi[i];
    }
    const ComplexScalar cur = coeff * bracket;
    const double kd = static_cast<double>(k);
    coeff *= (u1 + kd) * (u2 + kd) * w / ((l1 + kd) * (kd + 1.0));
    for (int i = 0; i < 4; ++i) {
      if (slots[i].first != 0.0) psi[i] += 1.0 / (slots[i].second + cplx(kd));
    }
    return cur;
  };
  return sum_series(term, tol, max_terms).value;
}

// The finite power-form correction sum shared by the 3F2 identities:
//   sum_{k=0}^{n-2} (nu-n+1)_k Gamma(k-n+beta+1) /
//                   (Gamma(k-n+beta+sigma+1) k!) * z^k.
ComplexScalar power_form_tail(ComplexScalar beta, ComplexScalar nu,
                              ComplexScalar sigma, long long n,
                              ComplexScalar z) {
  CompensatedSum acc;
  for (long long k = 0; k <= n - 2; ++k) {
    const ComplexScalar shift = cplx(static_cast<double>(k - n + 1));
    GammaProd g;
    g.gamma(shift + beta).rgamma(shift + beta + sigma);
    acc.add(pochhammer(nu - cplx(static_cast<double>(n)) + kOne, k) *
            g.value() * principal_power(z, cplx(static_cast<double>(k))) /
            cplx(factorial_d(k)));
  }
  return acc.value();
}

// Left side shared by the 3F2 identities written with an explicit
// prefactor:  Gamma(beta) (nu-n+1)_{n-1} z^{n-1} / (Gamma(beta+sigma)
// (n-1)!) * 3F2(beta, nu, 1; beta+sigma, n; z).
ComplexScalar prefactored_3f2(ComplexScalar beta, ComplexScalar nu,
                              ComplexScalar sigma, long long n,
                              ComplexScalar z) {
  GammaProd c;
  c.gamma(beta).rgamma(beta + sigma);
  const ComplexScalar nd = cplx(static_cast<double>(n));
  const ComplexScalar pref = c.value() * pochhammer(nu - nd + kOne, n - 1) /
                             cplx(factorial_d(n - 1));
  return pref * principal_power(z, nd - kOne) *
         pfq_series({beta, nu, kOne}, {beta + sigma, nd}, z).value;
}

// Direct quadrature of the kernel integral behind the 3F2 splittings:
//   int_0^inf s^(beta-n) (S+s)^(n-nu-1) (1+s)^-(beta+sigma-nu) ds,
// with S = 1/(1-x).  Real parameters only.
ComplexScalar kernel_integral_quadrature(double beta, double nu, double sigma,
                                         long long n, double x) {
  const double S = 1.0 / (1.0 - x);
  const double eb = beta - static_cast<double>(n);
  const double ev = static_cast<double>(n) - nu - 1.0;
  const double el = beta + sigma - nu;
  auto f = [=](double s, double) {
    return cplx(std::exp(eb * std::log(s) + ev * std::log(S + s) -
                         el * std::log1p(s)));
  };
  return tanh_sinh_semi_infinite(f, 0.0).value;
}

struct Sides {
  std::function<ComplexScalar()> lhs;
  std::function<ComplexScalar()> rhs;
};

// ---------------------------------------------------------------------
// Gauss-function transformations.
// ---------------------------------------------------------------------

Sides sides_mainresult3(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), nu = p.at("nu"), rho = p.at("rho");
  require_two_sided_arg(z);
  require(std::abs(z) > 0.0, "argument z must be nonzero");
  require(rho.real() > 0.0, "Re rho must be positive");
  require(dint(rho) > kIntegerTol, "rho must be off the integer lattice");
  require(dint(rho - nu) > kIntegerTol,
          "rho - nu must be off the integer lattice");
  require(std::abs(mu) > 0.0 && std::abs(nu) > 0.0,
          "mu and nu must be nonzero");
  require((rho - nu + mu).real() > 0.0, "Re(rho - nu + mu) must be positive");

  auto lhs = [=]() {
    return gauss_series(Gauss2F1Params(mu, nu, mu + rho, kOne - z)).value;
  };
  auto rhs = [=]() {
    GammaProd c1;
    c1.gamma(mu + rho).rgamma(nu).rgamma(mu).rgamma(rho - nu + kOne);
    const ComplexScalar t1 =
        -(kPi / sin_pi(rho - nu)) * c1.value() *
        principal_power(z, rho - nu) *
        gauss_series(Gauss2F1Params(rho - nu + mu, rho, rho - nu + kOne, z))
            .value;
    GammaProd c2;
    c2.gamma(mu + rho).gamma(kOne - rho).rgamma(nu - rho + kOne).rgamma(
        mu - nu + rho);
    const ComplexScalar t2 =
        (sin_pi(rho) / sin_pi(rho - nu)) * principal_power(kOne - z, -mu) *
        c2.value() *
        pfaff_transform(Gauss2F1Params(mu, nu, nu - rho + kOne, z / (z - kOne)));
    return t1 + t2;
  };
  return {lhs, rhs};
}

Sides sides_mainresult4x(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), nu = p.at("nu"), sigma = p.at("sigma");
  require_two_sided_arg(z, 0.9);
  require(dint(sigma - mu - nu) > kIntegerTol,
          "sigma - mu - nu must be off the integer lattice");
  auto lhs = [=]() {
    return gauss_series(Gauss2F1Params(mu, nu, sigma, z)).value;
  };
  auto rhs = [=]() {
    return gauss_2f1_near_one(Gauss2F1Params(mu, nu, sigma, z)).value;
  };
  return {lhs, rhs};
}

Sides sides_mainresult1(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), nu = p.at("nu");
  const long long n = p.int_at("n");
  require_two_sided_arg(z);
  require(n >= 1, "n must be a positive integer");
  require(dint(nu) > kIntegerTol, "nu must be off the integer lattice");
  require(std::abs(mu) > 0.0, "mu must be nonzero");
  const ComplexScalar nd = cplx(static_cast<double>(n));
  require((nd - nu + mu).real() > 0.0, "Re(n - nu + mu) must be positive");

  auto lhs = [=]() {
    return gauss_series(Gauss2F1Params(mu, nu, mu + nd, kOne - z)).value;
  };
  auto rhs = [=]() {
    const double sgn = parity_sign(n);
    const ComplexScalar csc = kPi / sin_pi(nu);
    GammaProd c1;
    c1.gamma(mu + nd).rgamma(nu).rgamma(mu).rgamma(nd - nu + kOne);
    const ComplexScalar t1 =
        sgn * csc * c1.value() * principal_power(z, nd - nu) *
        gauss_series(Gauss2F1Params(nd - nu + mu, nd, nd - nu + kOne, z))
            .value;
    GammaProd c2;
    c2.gamma(mu + nd).rgamma(nu).rgamma(mu - nu + nd).rgamma(nd);
    const ComplexScalar t2 = -sgn * csc * c2.value() * xxx12_sum(mu, nu, n, z);
    return t1 + t2;
  };
  return {lhs, rhs};
}

Sides sides_repcase4bx(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), rho = p.at("rho");
  const long long N = p.int_at("N");
  require(N >= 1, "N must be a positive integer");
  const ComplexScalar nu = rho + cplx(static_cast<double>(N));
  require_two_sided_arg(z);
  require(std::abs(z) > 0.0, "argument z must be nonzero");
  require(rho.real() > 0.0, "Re rho must be positive");
  require(dint(rho) > kIntegerTol, "rho must be off the integer lattice");
  require((mu - cplx(static_cast<double>(N))).real() > 0.0,
          "Re(mu) must exceed N");

  auto lhs = [=]() {
    return gauss_series(Gauss2F1Params(mu, nu, mu + rho, kOne - z)).value;
  };
  auto rhs = [=]() {
    // finite head carrying the z^(rho - nu) branch
    GammaProd c1;
    c1.gamma(mu + rho).gamma(nu - rho).rgamma(mu).rgamma(nu);
    CompensatedSum head;
    for (long long k = 0; k <= N - 1; ++k) {
      head.add(pochhammer(rho, k) * pochhammer(mu - nu + rho, k) /
               (pochhammer(kOne - nu + rho, k) * cplx(factorial_d(k))) *
               principal_power(z, cplx(static_cast<double>(k))));
    }
    const ComplexScalar t1 =
        c1.value() * principal_power(z, rho - nu) * head.value();

    GammaProd cl;
    cl.gamma(mu + rho).rgamma(rho).rgamma(nu - rho + kOne).rgamma(
        mu - nu + rho);
    const double sgn = parity_sign(N);
    const ComplexScalar t2 =
        -sgn * cl.value() *
        gauss_series(Gauss2F1Params(mu, nu, nu - rho + kOne, z)).value *
        std::log(z);
    const ComplexScalar t3 =
        sgn * cl.value() *
        psi_weighted_series(kOne, mu, nu, nu - rho + kOne, z, cplx(0.0),
                            {{{+1.0, kOne},
                              {-1.0, mu},
                              {+1.0, nu + kOne - rho},
                              {-1.0, nu}}});
    return t1 + t2 + t3;
  };
  return {lhs, rhs};
}

Sides sides_repcase4b_shift(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), nu = p.at("nu");
  const long long n = p.int_at("n");
  require(n >= 1, "n must be a positive integer");
  require_two_sided_arg(z, 0.9);
  require(dint(mu) > kIntegerTol && dint(nu) > kIntegerTol,
          "mu and nu must be off the integer lattice");
  const ComplexScalar sigma = mu + nu - cplx(static_cast<double>(n));
  auto lhs = [=]() {
    return gauss_series(Gauss2F1Params(mu, nu, sigma, z)).value;
  };
  auto rhs = [=]() {
    return gauss_2f1_near_one(Gauss2F1Params(mu, nu, sigma, z)).value;
  };
  return {lhs, rhs};
}

Sides sides_resultx(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), nu = p.at("nu");
  const long long P = p.int_at("P");
  require(P >= 1, "P must be a positive integer");
  const ComplexScalar Pd = cplx(static_cast<double>(P));
  const ComplexScalar rho = nu + Pd;
  require_two_sided_arg(z);
  require(std::abs(z) > 0.0, "argument z must be nonzero");
  require(nu.real() > 0.0, "Re nu must be positive");
  require(dint(nu) > kIntegerTol, "nu must be off the integer lattice");
  require(mu.real() > 0.0, "Re mu must be positive");

  auto lhs = [=]() {
    return gauss_series(Gauss2F1Params(mu, nu, mu + rho, kOne - z)).value;
  };
  auto rhs = [=]() {
    GammaProd ca;
    ca.gamma(mu + rho).rgamma(mu).rgamma(nu).rgamma(Pd + kOne);
    const ComplexScalar a =
        -parity_sign(P) * ca.value() * principal_power(z, Pd) *
        psi_weighted_series(kOne, rho, mu + Pd, Pd + kOne, z, std::log(z),
                            {{{-1.0, Pd + kOne},
                              {+1.0, mu + Pd},
                              {+1.0, rho},
                              {-1.0, kOne}}});
    GammaProd cb;
    cb.gamma(mu + rho).rgamma(rho).rgamma(mu + rho - nu);
    CompensatedSum head;
    for (long long k = 0; k <= P - 1; ++k) {
      head.add(cplx(parity_sign(k) * factorial_d(P - 1 - k) / factorial_d(k)) *
               pochhammer(mu, k) * pochhammer(nu, k) *
               principal_power(z, cplx(static_cast<double>(k))));
    }
    return a + cb.value() * head.value();
  };
  return {lhs, rhs};
}

Sides sides_repcase4d(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), nu = p.at("nu");
  const long long m = p.int_at("m");
  require(m >= 1, "m must be a positive integer");
  require_two_sided_arg(z, 0.9);
  require(dint(mu) > kIntegerTol && dint(nu) > kIntegerTol,
          "mu and nu must be off the integer lattice");
  const ComplexScalar sigma = mu + nu + cplx(static_cast<double>(m));
  auto lhs = [=]() {
    return gauss_series(Gauss2F1Params(mu, nu, sigma, z)).value;
  };
  auto rhs = [=]() {
    return gauss_2f1_near_one(Gauss2F1Params(mu, nu, sigma, z)).value;
  };
  return {lhs, rhs};
}

Sides sides_repcase4c(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), rho = p.at("rho");
  require_two_sided_arg(z, 0.9);
  require(mu.real() > 0.0 && rho.real() > 0.0,
          "Re mu and Re rho must be positive");
  require(dint(mu) > kIntegerTol && dint(rho) > kIntegerTol,
          "mu and rho must be off the integer lattice");
  auto lhs = [=]() {
    return gauss_series(Gauss2F1Params(mu, rho, mu + rho, z)).value;
  };
  auto rhs = [=]() {
    return gauss_2f1_near_one(Gauss2F1Params(mu, rho, mu + rho, z)).value;
  };
  return {lhs, rhs};
}

Sides sides_keykey(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar nu = p.at("nu");
  const long long n = p.int_at("n");
  require(n >= 1, "n must be a positive integer");
  require(std::abs(z) <= 0.95, "argument z must satisfy |z| <= 0.95");
  if (is_integer(nu)) {
    const long long iv = std::llround(nu.real());
    require(iv < 1 || iv > n - 1, "integer nu in [1, n-1] degenerates");
  }
  auto lhs = [=]() {
    return gauss_series(Gauss2F1Params(nu, kOne, cplx(static_cast<double>(n)),
                                       z))
        .value;
  };
  auto rhs = [=]() { return gauss_2f1_nu1_n(nu, n, z); };
  return {lhs, rhs};
}

Sides sides_xxx12(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), nu = p.at("nu");
  const long long n = p.int_at("n");
  require(n >= 1, "n must be a positive integer");
  require(std::abs(z) <= 0.95, "argument z must satisfy |z| <= 0.95");
  const ComplexScalar low = nu - cplx(static_cast<double>(n)) + kOne;
  require(!is_nonpositive_integer(nu) && !is_nonpositive_integer(low),
          "nu and nu - n + 1 must avoid nonpositive integers");
  auto lhs = [=]() { return xxx12_sum(mu, nu, n, z); };
  auto rhs = [=]() {
    GammaProd c;
    c.gamma(nu).rgamma(low);
    return c.value() * gauss_series(Gauss2F1Params(mu, nu, low, z)).value;
  };
  return {lhs, rhs};
}

// ---------------------------------------------------------------------
// 3F2 family.
// ---------------------------------------------------------------------

void require_3f2_core(ComplexScalar beta, ComplexScalar nu,
                      ComplexScalar sigma, long long n) {
  require(n >= 1, "n must be a positive integer");
  require(dint(nu) > kIntegerTol, "nu must be off the integer lattice");
  require(sigma.real() > 0.0, "Re sigma must be positive");
  require((beta + sigma - nu).real() > 0.0,
          "Re(beta + sigma - nu) must be positive");
}

Sides sides_iden3f2(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar beta = p.at("beta"), nu = p.at("nu"),
                      sigma = p.at("sigma");
  const long long n = p.int_at("n");
  const double x = real_unit_arg(z);
  require_3f2_core(beta, nu, sigma, n);
  require(beta.real() > static_cast<double>(n) - 1.0,
          "Re beta must exceed n - 1");
  require(dint(sigma - nu) > kIntegerTol,
          "sigma - nu must be off the integer lattice");
  require(!is_nonpositive_integer(beta + sigma - nu),
          "beta + sigma - nu must avoid nonpositive integers");
  const ComplexScalar nd = cplx(static_cast<double>(n));
  const ComplexScalar xz = cplx(x);

  auto lhs = [=]() { return prefactored_3f2(beta, nu, sigma, n, xz); };
  auto rhs = [=]() {
    const ComplexScalar w = kOne - xz;
    const ComplexScalar csc = kPi / sin_pi(sigma - nu);
    const double sgn = parity_sign(n);
    GammaProd c1;
    c1.rgamma(kOne + nu - nd).rgamma(sigma - nu + nd);
    const ComplexScalar t1 =
        sgn * csc * c1.value() * principal_power(w, sigma + nd - nu - kOne) *
        gauss_series(
            Gauss2F1Params(sigma, beta + sigma - nu, sigma - nu + nd, w))
            .value;
    GammaProd c2;
    c2.gamma(beta - nd + kOne).rgamma(sigma).rgamma(beta + sigma - nu).rgamma(
        cplx(2.0) - nd - sigma + nu);
    const ComplexScalar t2 =
        -sgn * csc * c2.value() *
        gauss_series(Gauss2F1Params(kOne + nu - nd, beta - nd + kOne,
                                    cplx(2.0) - nd - sigma + nu, w))
            .value;
    return t1 + t2 - power_form_tail(beta, nu, sigma, n, xz);
  };
  return {lhs, rhs};
}

Sides sides_general3f2(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar beta = p.at("beta"), nu = p.at("nu"),
                      sigma = p.at("sigma");
  const long long n = p.int_at("n");
  require_3f2_core(beta, nu, sigma, n);
  require(std::abs(z) <= 0.95 && std::abs(kOne - z) <= 0.9,
          "argument z must keep both series in range");
  require(dint(sigma - nu) > kIntegerTol,
          "sigma - nu must be off the integer lattice");
  require(dint(beta + sigma - nu) > kIntegerTol,
          "beta + sigma - nu must be off the integer lattice");
  const ThreeF2Params q(beta, nu, n, sigma, z);
  require(classify_sigma_nu_case(q) == ThreeF2Case::NonIntegerGap,
          "parameters must classify off the integer lattice");
  auto lhs = [=]() {
    return pfq_series({beta, nu, kOne},
                      {beta + sigma, cplx(static_cast<double>(n))}, z)
        .value;
  };
  auto rhs = [=]() { return threef2_transform_general(q).value; };
  return {lhs, rhs};
}

Sides sides_res2(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar beta = p.at("beta"), nu = p.at("nu");
  const long long n = p.int_at("n");
  const long long m = p.int_at("m");
  require(m >= 1, "m must be a positive integer");
  const ComplexScalar sigma = nu + cplx(static_cast<double>(m - n));
  require_3f2_core(beta, nu, sigma, n);
  require(dint(beta) > kIntegerTol, "beta must be off the integer lattice");
  require(std::abs(z) <= 0.95 && std::abs(kOne - z) <= 0.9,
          "argument z must keep both series in range");
  const ComplexScalar nd = cplx(static_cast<double>(n));

  auto lhs = [=]() { return prefactored_3f2(beta, nu, sigma, n, z); };
  auto rhs = [=]() {
    const ComplexScalar w = kOne - z;
    GammaProd ca;
    ca.rgamma(sigma).rgamma(beta + sigma - nu);
    CompensatedSum head;
    for (long long k = 0; k <= m - 2; ++k) {
      head.add(cplx(parity_sign(k) * factorial_d(m - 2 - k) / factorial_d(k)) *
               gamma(cplx(static_cast<double>(k)) + beta - nd + kOne) *
               pochhammer(kOne + nu - nd, k) *
               principal_power(w, cplx(static_cast<double>(k))));
    }
    const ComplexScalar a = ca.value() * head.value();

    GammaProd cb;
    cb.rgamma(nu - nd + kOne);
    const ComplexScalar md = cplx(static_cast<double>(m));
    const ComplexScalar b =
        parity_sign(m) * cb.value() *
        principal_power(w, sigma + nd - nu - kOne) *
        psi_weighted_series(cplx(1.0 / factorial_d(m - 1)), sigma,
                            beta + sigma - nu, md, w, std::log(w),
                            {{{-1.0, md},
                              {+1.0, sigma},
                              {+1.0, beta + sigma - nu},
                              {-1.0, kOne}}});
    return a + b - power_form_tail(beta, nu, sigma, n, z);
  };
  return {lhs, rhs};
}

Sides sides_res2x(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar beta = p.at("beta"), nu = p.at("nu");
  const long long n = p.int_at("n");
  const long long m = p.int_at("m");
  require(m >= 1, "m must be a positive integer");
  const ComplexScalar sigma = nu + cplx(static_cast<double>(m - n));
  require_3f2_core(beta, nu, sigma, n);
  require(dint(beta) > kIntegerTol, "beta must be off the integer lattice");
  require(std::abs(z) <= 0.95 && std::abs(kOne - z) <= 0.9,
          "argument z must keep both series in range");
  const ThreeF2Params q(beta, nu, n, sigma, z);
  require(classify_sigma_nu_case(q) == ThreeF2Case::PolePositive,
          "parameters must classify on the positive lattice");
  auto lhs = [=]() {
    return pfq_series({beta, nu, kOne},
                      {beta + sigma, cplx(static_cast<double>(n))}, z)
        .value;
  };
  auto rhs = [=]() { return threef2_transform_pole_pos(q).value; };
  return {lhs, rhs};
}

Sides sides_bebebe(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar beta = p.at("beta"), nu = p.at("nu");
  const long long n = p.int_at("n");
  const long long m = p.int_at("m");
  require(m >= 0, "m must be a nonnegative integer");
  const ComplexScalar sigma = nu - cplx(static_cast<double>(m + n));
  require_3f2_core(beta, nu, sigma, n);
  require(dint(beta) > kIntegerTol, "beta must be off the integer lattice");
  require(std::abs(z) <= 0.95 && std::abs(kOne - z) <= 0.9,
          "argument z must keep both series in range");
  const ComplexScalar nd = cplx(static_cast<double>(n));

  auto lhs = [=]() { return prefactored_3f2(beta, nu, sigma, n, z); };
  auto rhs = [=]() {
    const ComplexScalar w = kOne - z;
    GammaProd ca;
    ca.rgamma(kOne - nd + nu);
    CompensatedSum head;
    for (long long k = 0; k <= m; ++k) {
      const ComplexScalar kd = cplx(static_cast<double>(k));
      head.add(cplx(parity_sign(k) / factorial_d(k)) *
               pochhammer(beta + sigma - nu, k) * pochhammer(sigma, k) *
               gamma(kOne + nu - sigma - nd - kd) * principal_power(w, kd));
    }
    const ComplexScalar a = ca.value() *
                            principal_power(w, nd - nu - kOne + sigma) *
                            head.value();

    GammaProd cb;
    cb.gamma(beta - nd + kOne).rgamma(beta + sigma - nu).rgamma(sigma);
    const ComplexScalar m2 = cplx(static_cast<double>(m + 2));
    const ComplexScalar b =
        parity_sign(m) * cb.value() *
        psi_weighted_series(cplx(1.0 / factorial_d(m + 1)), beta - nd + kOne,
                            nu + kOne - nd, m2, w, std::log(w),
                            {{{-1.0, kOne},
                              {+1.0, nu + kOne - nd},
                              {+1.0, beta - nd + kOne},
                              {-1.0, m2}}});
    return a + b - power_form_tail(beta, nu, sigma, n, z);
  };
  return {lhs, rhs};
}

Sides sides_bebebex(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar beta = p.at("beta"), nu = p.at("nu");
  const long long n = p.int_at("n");
  const long long m = p.int_at("m");
  require(m >= 0, "m must be a nonnegative integer");
  const ComplexScalar sigma = nu - cplx(static_cast<double>(m + n));
  require_3f2_core(beta, nu, sigma, n);
  require(dint(beta) > kIntegerTol, "beta must be off the integer lattice");
  require(std::abs(z) <= 0.95 && std::abs(kOne - z) <= 0.9,
          "argument z must keep both series in range");
  const ThreeF2Params q(beta, nu, n, sigma, z);
  require(classify_sigma_nu_case(q) == ThreeF2Case::PoleNonpositive,
          "parameters must classify on the nonpositive lattice");
  auto lhs = [=]() {
    return pfq_series({beta, nu, kOne},
                      {beta + sigma, cplx(static_cast<double>(n))}, z)
        .value;
  };
  auto rhs = [=]() { return threef2_transform_pole_neg(q).value; };
  return {lhs, rhs};
}

// ---------------------------------------------------------------------
// Stieltjes-integral assemblies (b is derived from a and z).
// ---------------------------------------------------------------------

struct StieltjesPoint {
  double a = 0.0;
  double b = 0.0;
};

StieltjesPoint stieltjes_ab(const ParamRecord& p, ComplexScalar z) {
  const double x = real_unit_arg(z);
  const double a = real_at(p, "a");
  require(a > 0.0, "a must be positive");
  return {a, a * (1.0 - x)};
}

Sides sides_mainlemma(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), nu = p.at("nu"), rho = p.at("rho");
  const StieltjesPoint ab = stieltjes_ab(p, z);
  const StieltjesGaussSpec spec(cplx(ab.a), cplx(ab.b), mu, nu, rho);
  auto lhs = [=]() {
    return gauss_series(Gauss2F1Params(mu, nu, mu + rho, z)).value;
  };
  auto rhs = [=]() {
    GammaProd c;
    c.gamma(mu + rho).rgamma(nu).rgamma(mu - nu + rho).power(cplx(ab.a), mu)
        .power(cplx(ab.b), rho - nu);
    return c.value() * stieltjes_direct(spec);
  };
  return {lhs, rhs};
}

Sides sides_sese(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), nu = p.at("nu"), rho = p.at("rho");
  const StieltjesPoint ab = stieltjes_ab(p, z);
  const StieltjesGaussSpec spec(cplx(ab.a), cplx(ab.b), mu, nu, rho);
  require(classify_case(spec) == CaseTag::BranchBranch,
          "parameters must classify as the branch/branch case");
  auto lhs = [=]() { return stieltjes_direct(spec); };
  auto rhs = [=]() { return stieltjes_fpi_series(spec).value; };
  return {lhs, rhs};
}

Sides sides_representation1a(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), nu = p.at("nu");
  const long long n = p.int_at("n");
  require(n >= 1, "n must be a positive integer");
  const StieltjesPoint ab = stieltjes_ab(p, z);
  const StieltjesGaussSpec spec(cplx(ab.a), cplx(ab.b), mu, nu,
                                cplx(static_cast<double>(n)));
  require(classify_case(spec) == CaseTag::PoleKernel,
          "parameters must classify as the pole-kernel case");
  auto lhs = [=]() { return stieltjes_direct(spec); };
  auto rhs = [=]() { return stieltjes_fpi_series(spec).value; };
  return {lhs, rhs};
}

Sides sides_may(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), rho = p.at("rho");
  const long long N = p.int_at("N");
  const ComplexScalar nu = rho + cplx(static_cast<double>(N));
  const StieltjesPoint ab = stieltjes_ab(p, z);
  require(rho.real() > 0.0 && dint(rho) > kIntegerTol,
          "rho must be positive and off the integer lattice");
  require(nu.real() > 0.0, "Re nu must be positive");
  require((mu - cplx(static_cast<double>(N))).real() > 0.0,
          "Re(mu + rho - nu) must be positive");
  const StieltjesGaussSpec spec(cplx(ab.a), cplx(ab.b), mu, nu, rho);
  const ComplexScalar a = cplx(ab.a), b = cplx(ab.b);

  auto lhs = [=]() { return stieltjes_direct(spec); };
  auto rhs = [=]() {
    // binomial moment sum: ordinary gamma-form moments while the exponent
    // keeps the integral convergent, the logarithmic closed form beyond
    std::function<ComplexScalar(int)> term = [=](int k) -> ComplexScalar {
      const ComplexScalar coef =
          binomial_complex(-rho, k) *
          principal_power(b, cplx(static_cast<double>(k)));
      ComplexScalar mk;
      if (static_cast<long long>(k) < N) {
        GammaProd g;
        const ComplexScalar kd = cplx(static_cast<double>(k));
        g.gamma(nu - rho - kd).gamma(kd + mu - nu + rho).rgamma(mu).power(
            a, nu - rho - kd - mu);
        mk = g.value();
      } else {
        mk = fpi_pole(a, mu, static_cast<long long>(k) - N);
      }
      return coef * mk;
    };
    const ComplexScalar moments = sum_series(term).value;
    const double sgn = parity_sign(N + 1);
    return moments + sgn * (sin_pi(rho) / kPi) *
                         progenic_fpi_gauss_log(a, b, mu, nu, rho);
  };
  return {lhs, rhs};
}

Sides sides_case4b(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), rho = p.at("rho");
  const long long N = p.int_at("N");
  require(N >= 1, "N must be a positive integer");
  const ComplexScalar nu = rho + cplx(static_cast<double>(N));
  const StieltjesPoint ab = stieltjes_ab(p, z);
  const StieltjesGaussSpec spec(cplx(ab.a), cplx(ab.b), mu, nu, rho);
  require(classify_case(spec) == CaseTag::PoleOriginPos,
          "parameters must classify as the positive pole-origin case");
  auto lhs = [=]() { return stieltjes_direct(spec); };
  auto rhs = [=]() { return stieltjes_fpi_series(spec).value; };
  return {lhs, rhs};
}

Sides sides_case4c(const ParamRecord& p, ComplexScalar z) {
  const ComplexScalar mu = p.at("mu"), nu = p.at("nu");
  const long long P = p.int_at("P");
  require(P >= 0, "P must be a nonnegative integer");
  const ComplexScalar rho = nu + cplx(static_cast<double>(P));
  const StieltjesPoint ab = stieltjes_ab(p, z);
  const StieltjesGaussSpec spec(cplx(ab.a), cplx(ab.b), mu, nu, rho);
  require(classify_case(spec) == CaseTag::PoleOriginNeg,
          "parameters must classify as the nonpositive pole-origin case");
  auto lhs = [=]() { return stieltjes_direct(spec); };
  auto rhs = [=]() { return stieltjes_fpi_series(spec).value; };
  return {lhs, rhs};
}

// ---------------------------------------------------------------------
// Kernel-integral splittings verified against direct quadrature.
// ---------------------------------------------------------------------

Sides sides_keyx(const ParamRecord& p, ComplexScalar z) {
  const double beta = real_at(p, "beta"), nu = real_at(p, "nu"),
               sigma = real_at(p, "sigma");
  const long long n = p.int_at("n");
  const double x = real_unit_arg(z);
  require_3f2_core(cplx(beta), cplx(nu), cplx(sigma), n);
  require(beta > static_cast<double>(n) - 1.0, "Re beta must exceed n - 1");
  require(dint(sigma - nu) > kIntegerTol,
          "sigma - nu must be off the integer lattice");
  require(dint(beta + sigma - nu) > kIntegerTol,
          "beta + sigma - nu must be off the integer lattice");
  const ThreeF2Params q(cplx(beta), cplx(nu), n, cplx(sigma), cplx(x));

  auto lhs = [=]() { return kernel_integral_quadrature(beta, nu, sigma, n, x); };
  auto rhs = [=]() {
    const ComplexScalar w = cplx(1.0 - x);
    const ComplexScalar gap = cplx(sigma - nu);
    const ComplexScalar bsn = cplx(beta + sigma - nu);
    const ComplexScalar nd = cplx(static_cast<double>(n));
    GammaProd c;
    c.gamma(cplx(sigma)).rgamma(kOne + cplx(nu) - nd).rgamma(gap + nd);
    const ComplexScalar ft =
        cplx(parity_sign(n)) * kPi / sin_pi(gap) * c.value() *
        principal_power(w, cplx(sigma)) *
        gauss_series(Gauss2F1Params(cplx(sigma), bsn, gap + nd, w)).value;
    const ComplexScalar piece =
        progenic_3f2_pieces(q, ProgenicPieceKind::PlainBranch);
    return ft - cplx(parity_sign(n)) * sin_pi(bsn) / sin_pi(gap) * piece;
  };
  return {lhs, rhs};
}

Sides sides_fullint(const ParamRecord& p, ComplexScalar z) {
  const double beta = real_at(p, "beta"), nu = real_at(p, "nu");
  const long long n = p.int_at("n");
  const long long K = p.int_at("K");
  require(K >= 1, "K must be a positive integer");
  const double sigma = nu + static_cast<double>(K - n);
  const double x = real_unit_arg(z);
  require_3f2_core(cplx(beta), cplx(nu), cplx(sigma), n);
  require(beta > static_cast<double>(n) - 1.0, "Re beta must exceed n - 1");
  require(dint(beta) > kIntegerTol, "beta must be off the integer lattice");
  const ThreeF2Params q(cplx(beta), cplx(nu), n, cplx(sigma), cplx(x));
  require(classify_sigma_nu_case(q) == ThreeF2Case::PolePositive,
          "parameters must classify on the positive lattice");

  auto lhs = [=]() { return kernel_integral_quadrature(beta, nu, sigma, n, x); };
  auto rhs = [=]() {
    const ComplexScalar w = cplx(1.0 - x);
    const ComplexScalar sd = cplx(sigma);
    const ComplexScalar Kd = cplx(static_cast<double>(K));
    const ComplexScalar bsn = cplx(beta + sigma - nu);
    GammaProd c;
    c.gamma(sd).rgamma(kOne + cplx(nu) - cplx(static_cast<double>(n)));
    const ComplexScalar term1 =
        cplx(parity_sign(K - 1)) * c.value() * principal_power(w, sd) *
        psi_weighted_series(cplx(1.0 / factorial_d(K - 1)), bsn, sd, Kd, w,
                            -std::log(w),
                            {{{+1.0, Kd},
                              {-1.0, sd},
                              {0.0, kOne},
                              {0.0, kOne}}});
    const ComplexScalar piece =
        progenic_3f2_pieces(q, ProgenicPieceKind::LogPolePositive);
    return term1 +
           cplx(parity_sign(n)) * (sin_pi(cplx(beta)) / kPi) * piece;
  };
  return {lhs, rhs};
}

Sides sides_keyxxx(const ParamRecord& p, ComplexScalar z) {
  const double beta = real_at(p, "beta"), nu = real_at(p, "nu");
  const long long n = p.int_at("n");
  const long long M = p.int_at("M");
  require(M >= 0, "M must be a nonnegative integer");
  const double sigma = nu - static_cast<double>(M + n);
  const double x = real_unit_arg(z);
  require_3f2_core(cplx(beta), cplx(nu), cplx(sigma), n);
  require(beta > static_cast<double>(n) - 1.0, "Re beta must exceed n - 1");
  require(dint(beta) > kIntegerTol, "beta must be off the integer lattice");
  const ThreeF2Params q(cplx(beta), cplx(nu), n, cplx(sigma), cplx(x));
  require(classify_sigma_nu_case(q) == ThreeF2Case::PoleNonpositive,
          "parameters must classify on the nonpositive lattice");

  auto lhs = [=]() { return kernel_integral_quadrature(beta, nu, sigma, n, x); };
  auto rhs = [=]() {
    const ComplexScalar w = cplx(1.0 - x);
    const ComplexScalar sd = cplx(sigma);
    const ComplexScalar nd = cplx(static_cast<double>(n));
    const ComplexScalar bd = cplx(beta);
    const ComplexScalar nug = cplx(nu);
    GammaProd c1;
    c1.rgamma(kOne - nd + nug);
    CompensatedSum head;
    for (long long k = 0; k <= M; ++k) {
      const ComplexScalar kd = cplx(static_cast<double>(k));
      head.add(cplx(parity_sign(k) / factorial_d(k)) *
               pochhammer(bd + sd - nug, k) * gamma(kd + sd) *
               gamma(kOne + nug - sd - nd - kd) * principal_power(w, kd + sd));
    }
    const ComplexScalar t1 = c1.value() * head.value();

    const ComplexScalar M2 = cplx(static_cast<double>(M + 2));
    GammaProd c2;
    c2.gamma(bd - nd + kOne).rgamma(bd + sd - nug);
    const ComplexScalar t2 =
        cplx(parity_sign(M)) * c2.value() *
        principal_power(w, nug + kOne - nd) *
        psi_weighted_series(cplx(1.0 / factorial_d(M + 1)), bd - nd + kOne,
                            nug + kOne - nd, M2, w, std::log(w),
                            {{{-1.0, kOne},
                              {+1.0, nug + kOne - nd},
                              {+1.0, bd - nd + kOne},
                              {-1.0, M2}}});
    return t1 + t2;
  };
  return {lhs, rhs};
}

Sides make_sides(IdentityTag tag, const ParamRecord& p, ComplexScalar z) {
  switch (tag) {
    case IdentityTag::MainResult3:      return sides_mainresult3(p, z);
    case IdentityTag::MainResult4x:     return sides_mainresult4x(p, z);
    case IdentityTag::MainResult1:      return sides_mainresult1(p, z);
    case IdentityTag::RepCase4bx:       return sides_repcase4bx(p, z);
    case IdentityTag::RepCase4bShift:   return sides_repcase4b_shift(p, z);
    case IdentityTag::ResultX:          return sides_resultx(p, z);
    case IdentityTag::RepCase4d:        return sides_repcase4d(p, z);
    case IdentityTag::RepCase4c:        return sides_repcase4c(p, z);
    case IdentityTag::Keykey:           return sides_keykey(p, z);
    case IdentityTag::Xxx12:            return sides_xxx12(p, z);
    case IdentityTag::Iden3F2:          return sides_iden3f2(p, z);
    case IdentityTag::General3F2:       return sides_general3f2(p, z);
    case IdentityTag::Res2:             return sides_res2(p, z);
    case IdentityTag::Res2x:            return sides_res2x(p, z);
    case IdentityTag::Bebebe:           return sides_bebebe(p, z);
    case IdentityTag::Bebebex:          return sides_bebebex(p, z);
    case IdentityTag::MainLemma:        return sides_mainlemma(p, z);
    case IdentityTag::Sese:             return sides_sese(p, z);
    case IdentityTag::Representation1a: return sides_representation1a(p, z);
    case IdentityTag::May:              return sides_may(p, z);
    case IdentityTag::Case4b:           return sides_case4b(p, z);
    case IdentityTag::Case4c:           return sides_case4c(p, z);
    case IdentityTag::Keyx:             return sides_keyx(p, z);
    case IdentityTag::Fullint:          return sides_fullint(p, z);
    case IdentityTag::Keyxxx:           return sides_keyxxx(p, z);
  }
  throw DomainError("verify: unknown identity tag");
}

}  // namespace

// -----------------------------------------------------------------------
// Names.
// -----------------------------------------------------------------------

namespace {
constexpr std::array<std::string_view, 25> kTagNames = {
    "MainResult3", "MainResult4x", "MainResult1",  "RepCase4bx",
    "RepCase4bShift", "ResultX",   "RepCase4d",    "RepCase4c",
    "Keykey",      "Xxx12",        "Iden3F2",      "General3F2",
    "Res2",        "Res2x",        "Bebebe",       "Bebebex",
    "MainLemma",   "Sese",         "Representation1a", "May",
    "Case4b",      "Case4c",       "Keyx",         "Fullint",
    "Keyxxx",
};

char lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (lower(a[i]) != lower(b[i])) return false;
  }
  return true;
}
}  // namespace

std::string_view tag_name(IdentityTag tag) {
  return kTagNames[static_cast<std::size_t>(tag)];
}

std::optional<IdentityTag> tag_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (iequals(kTagNames[i], name)) return kAllIdentityTags[i];
  }
  return std::nullopt;
}

// -----------------------------------------------------------------------
// ParamRecord.
// -----------------------------------------------------------------------

void ParamRecord::set(std::string_view name, ComplexScalar value) {
  for (auto& e : entries_) {
    if (e.first == name) {
      e.second = value;
      return;
    }
  }
  entries_.emplace_back(std::string(name), value);
}

void ParamRecord::set(std::string_view name, double value) {
  set(name, ComplexScalar(value, 0.0));
}

void ParamRecord::set(std::string_view name, long long value) {
  set(name, ComplexScalar(static_cast<double>(value), 0.0));
}

bool ParamRecord::has(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.first == name) return true;
  }
  return false;
}

ComplexScalar ParamRecord::at(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.first == name) return e.second;
  }
  throw DomainError("verify: missing parameter '" + std::string(name) + "'");
}

long long ParamRecord::int_at(std::string_view name) const {
  const ComplexScalar v = at(name);
  if (std::abs(v.imag()) > kIntegerTol ||
      std::abs(v.real() - std::llround(v.real())) > kIntegerTol) {
    throw DomainError("verify: parameter '" + std::string(name) +
                      "' must be an integer");
  }
  return std::llround(v.real());
}

// -----------------------------------------------------------------------
// Tolerances.
// -----------------------------------------------------------------------

double default_tolerance(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::MainResult3:
    case IdentityTag::MainResult4x:
    case IdentityTag::MainResult1:
    case IdentityTag::RepCase4bx:
    case IdentityTag::RepCase4bShift:
    case IdentityTag::ResultX:
    case IdentityTag::RepCase4d:
    case IdentityTag::RepCase4c:
    case IdentityTag::Keykey:
    case IdentityTag::Xxx12:
      return 1e-9;
    default:
      return 1e-8;
  }
}

// -----------------------------------------------------------------------
// Sampling.
// -----------------------------------------------------------------------

SampledPoint ParamSampler::draw(IdentityTag tag, Rng& rng, int index) const {
  SampledPoint out;
  out.z = cplx(rng.uniform(0.45, 0.7));
  ParamRecord& p = out.params;

  switch (tag) {
    case IdentityTag::MainResult3: {
      for (;;) {
        const double mu = rng.uniform(0.2, 1.7);
        const double nu = rng.uniform(0.2, 1.7);
        const double rho = rng.uniform(0.2, 1.7);
        if (dint(rho) < 0.05 || dint(rho - nu) < 0.05) continue;
        if (rho - nu + mu < 0.1) continue;
        p.set("mu", mu);
        p.set("nu", nu);
        p.set("rho", rho);
        break;
      }
      break;
    }
    case IdentityTag::MainResult4x: {
      for (;;) {
        const double mu = rng.uniform(0.2, 1.5);
        const double nu = rng.uniform(0.2, 1.5);
        const double sigma = rng.uniform(0.4, 2.6);
        if (dint(sigma - mu - nu) < 0.05) continue;
        if (sigma - mu < 0.5 && dint(sigma - mu) < 0.05) continue;
        if (sigma - nu < 0.5 && dint(sigma - nu) < 0.05) continue;
        p.set("mu", mu);
        p.set("nu", nu);
        p.set("sigma", sigma);
        break;
      }
      break;
    }
    case IdentityTag::MainResult1: {
      const long long n = 1 + (index % 3);
      for (;;) {
        const double mu = rng.uniform(0.2, 1.7);
        const double nu = rng.uniform(0.2, 1.7);
        if (dint(nu) < 0.05) continue;
        if (static_cast<double>(n) - nu + mu < 0.1) continue;
        p.set("mu", mu);
        p.set("nu", nu);
        p.set("n", n);
        break;
      }
      break;
    }
    case IdentityTag::RepCase4bx: {
      const long long N = 1 + (index % 3);
      for (;;) {
        const double rho = rng.uniform(0.2, 1.5);
        const double mu = static_cast<double>(N) + rng.uniform(0.2, 1.5);
        if (dint(rho) < 0.05 || dint(mu) < 0.05) continue;
        p.set("mu", mu);
        p.set("rho", rho);
        p.set("N", N);
        break;
      }
      break;
    }
    case IdentityTag::RepCase4bShift: {
      const long long n = 1 + (index % 3);
      for (;;) {
        const double mu = static_cast<double>(n) + rng.uniform(0.15, 1.3);
        const double nu = static_cast<double>(n) + rng.uniform(0.15, 1.3);
        if (dint(mu) < 0.05 || dint(nu) < 0.05) continue;
        p.set("mu", mu);
        p.set("nu", nu);
        p.set("n", n);
        break;
      }
      break;
    }
    case IdentityTag::ResultX: {
      const long long P = 1 + (index % 3);
      for (;;) {
        const double nu = rng.uniform(0.2, 1.6);
        const double mu = rng.uniform(0.2, 1.7);
        if (dint(nu) < 0.05) continue;
        p.set("mu", mu);
        p.set("nu", nu);
        p.set("P", P);
        break;
      }
      break;
    }
    case IdentityTag::RepCase4d: {
      const long long m = 1 + (index % 3);
      for (;;) {
        const double mu = rng.uniform(0.2, 1.6);
        const double nu = rng.uniform(0.2, 1.6);
        if (dint(mu) < 0.05 || dint(nu) < 0.05) continue;
        p.set("mu", mu);
        p.set("nu", nu);
        p.set("m", m);
        break;
      }
      break;
    }
    case IdentityTag::RepCase4c: {
      for (;;) {
        const double mu = rng.uniform(0.2, 1.6);
        const double rho = rng.uniform(0.2, 1.6);
        if (dint(mu) < 0.05 || dint(rho) < 0.05) continue;
        p.set("mu", mu);
        p.set("rho", rho);
        break;
      }
      break;
    }
    case IdentityTag::Keykey: {
      const long long n = 1 + (index % 6);
      for (;;) {
        const double nu = rng.uniform(0.2, 2.2);
        if (dint(nu) < 0.05) continue;
        p.set("nu", nu);
        p.set("n", n);
        break;
      }
      break;
    }
    case IdentityTag::Xxx12: {
      const long long n = 1 + (index % 3);
      for (;;) {
        const double mu = rng.uniform(0.2, 1.7);
        const double nu = rng.uniform(0.2, 1.8);
        if (dint(nu) < 0.05) continue;
        p.set("mu", mu);
        p.set("nu", nu);
        p.set("n", n);
        break;
      }
      break;
    }
    case IdentityTag::Iden3F2:
    case IdentityTag::General3F2: {
      const long long n = 1 + (index % 3);
      for (;;) {
        const double beta = static_cast<double>(n - 1) + rng.uniform(0.2, 1.6);
        const double nu = rng.uniform(0.1, 0.9);
        const double sigma = rng.uniform(0.2, 1.4);
        if (dint(sigma - nu) < 0.05) continue;
        if (dint(beta + sigma - nu) < 0.05) continue;
        if (beta + sigma - nu < 0.15) continue;
        p.set("beta", beta);
        p.set("nu", nu);
        p.set("sigma", sigma);
        p.set("n", n);
        break;
      }
      break;
    }
    case IdentityTag::Res2:
    case IdentityTag::Res2x: {
      const long long n = 1 + (index % 3);
      const long long m = 1 + ((index / 3) % 3);
      const double lift = std::max(0.0, static_cast<double>(n - m));
      for (;;) {
        const double nu = lift + rng.uniform(0.15, 0.95);
        const double beta = lift + rng.uniform(0.2, 1.7);
        if (dint(nu) < 0.05 || dint(beta) < 0.05) continue;
        p.set("beta", beta);
        p.set("nu", nu);
        p.set("n", n);
        p.set("m", m);
        break;
      }
      break;
    }
    case IdentityTag::Bebebe:
    case IdentityTag::Bebebex: {
      const long long n = 1 + (index % 2);
      const long long m = (index / 2) % 3;
      const double lift = static_cast<double>(m + n);
      for (;;) {
        const double nu = lift + rng.uniform(0.15, 0.95);
        const double beta = lift + rng.uniform(0.2, 1.7);
        if (dint(nu) < 0.05 || dint(beta) < 0.05) continue;
        p.set("beta", beta);
        p.set("nu", nu);
        p.set("n", n);
        p.set("m", m);
        break;
      }
      break;
    }
    case IdentityTag::MainLemma: {
      for (;;) {
        const double mu = rng.uniform(0.25, 1.6);
        const double nu = rng.uniform(0.2, 1.4);
        const double rho = rng.uniform(0.25, 1.5);
        if (rho + mu - nu < 0.12) continue;
        p.set("a", rng.uniform(1.2, 2.4));
        p.set("mu", mu);
        p.set("nu", nu);
        p.set("rho", rho);
        break;
      }
      break;
    }
    case IdentityTag::Sese: {
      for (;;) {
        const double mu = rng.uniform(0.3, 1.6);
        const double nu = rng.uniform(0.2, 1.4);
        const double rho = rng.uniform(0.3, 1.6);
        if (dint(rho) < 0.05 || dint(rho - nu) < 0.05) continue;
        if (rho + mu - nu < 0.12) continue;
        p.set("a", rng.uniform(1.3, 2.6));
        p.set("mu", mu);
        p.set("nu", nu);
        p.set("rho", rho);
        break;
      }
      break;
    }
    case IdentityTag::Representation1a: {
      const long long n = 1 + (index % 2);
      for (;;) {
        const double nu = rng.uniform(0.2, 1.4);
        const double mu = rng.uniform(0.3, 1.6);
        if (dint(nu) < 0.05) continue;
        if (static_cast<double>(n) + mu - nu < 0.12) continue;
        p.set("a", rng.uniform(1.3, 2.6));
        p.set("mu", mu);
        p.set("nu", nu);
        p.set("n", n);
        break;
      }
      break;
    }
    case IdentityTag::May: {
      static constexpr std::array<long long, 4> kOffsets = {1, 2, 0, -1};
      const long long N = kOffsets[static_cast<std::size_t>(index) % 4];
      for (;;) {
        const double rho = (N >= 1 ? 0.0 : static_cast<double>(-N)) +
                           rng.uniform(0.3, 1.4);
        const double mu = (N >= 1 ? static_cast<double>(N) : 0.0) +
                          rng.uniform(0.3, 1.5);
        if (dint(rho) < 0.05) continue;
        p.set("a", rng.uniform(1.3, 2.6));
        p.set("mu", mu);
        p.set("rho", rho);
        p.set("N", N);
        break;
      }
      break;
    }
    case IdentityTag::Case4b: {
      const long long N = 1 + (index % 2);
      for (;;) {
        const double rho = rng.uniform(0.3, 1.4);
        if (dint(rho) < 0.05) continue;
        p.set("a", rng.uniform(1.3, 2.6));
        p.set("mu", static_cast<double>(N) + rng.uniform(0.3, 1.4));
        p.set("rho", rho);
        p.set("N", N);
        break;
      }
      break;
    }
    case IdentityTag::Case4c: {
      const long long P = index % 3;
      for (;;) {
        const double nu = rng.uniform(0.3, 1.3);
        if (dint(nu) < 0.05) continue;
        p.set("a", rng.uniform(1.3, 2.6));
        p.set("mu", rng.uniform(0.3, 1.6));
        p.set("nu", nu);
        p.set("P", P);
        break;
      }
      break;
    }
    case IdentityTag::Keyx: {
      const long long n = 1 + (index % 3);
      for (;;) {
        const double beta = static_cast<double>(n - 1) + rng.uniform(0.3, 1.5);
        const double nu = rng.uniform(0.15, 0.85);
        const double sigma = rng.uniform(0.25, 1.2);
        if (dint(sigma - nu) < 0.05) continue;
        if (dint(beta + sigma - nu) < 0.05) continue;
        if (beta + sigma - nu < 0.15) continue;
        p.set("beta", beta);
        p.set("nu", nu);
        p.set("sigma", sigma);
        p.set("n", n);
        break;
      }
      break;
    }
    case IdentityTag::Fullint: {
      const long long n = 1 + (index % 2);
      const long long K = 1 + ((index / 2) % 3);
      const double lift = std::max(0.0, static_cast<double>(n - K));
      for (;;) {
        const double nu = lift + rng.uniform(0.15, 0.85);
        const double beta = static_cast<double>(n - 1) + rng.uniform(0.2, 1.6);
        if (dint(beta) < 0.05 || dint(nu) < 0.05) continue;
        p.set("beta", beta);
        p.set("nu", nu);
        p.set("n", n);
        p.set("K", K);
        break;
      }
      break;
    }
    case IdentityTag::Keyxxx: {
      const long long n = 1 + (index % 2);
      const long long M = (index / 2) % 2;
      const double lift = static_cast<double>(M + n);
      for (;;) {
        const double nu = lift + rng.uniform(0.15, 0.9);
        const double beta = lift + rng.uniform(0.2, 1.6);
        if (dint(beta) < 0.05 || dint(nu) < 0.05) continue;
        p.set("beta", beta);
        p.set("nu", nu);
        p.set("n", n);
        p.set("M", M);
        break;
      }
      break;
    }
  }
  return out;
}

// -----------------------------------------------------------------------
// Verification.
// -----------------------------------------------------------------------

VerificationReport verify_identity(IdentityTag tag, const ParamRecord& params,
                                   ComplexScalar z, double tol) {
  if (tol <= 0.0) tol = default_tolerance(tag);
  const Sides sides = make_sides(tag, params, z);

  VerificationReport rep;
  rep.tag = tag;
  rep.params = params;
  rep.params.set("z", z);
  try {
    rep.lhs = sides.lhs();
  } catch (const std::exception& e) {
    throw EvaluatorFailure("lhs", e.what());
  }
  try {
    rep.rhs = sides.rhs();
  } catch (const std::exception& e) {
    throw EvaluatorFailure("rhs", e.what());
  }
  rep.abs_residual = std::abs(rep.lhs - rep.rhs);
  rep.rel_residual =
      rep.abs_residual /
      std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-300});
  rep.pass = rep.rel_residual <= tol;
  return rep;
}

SweepReport sweep(IdentityTag tag, const ParamSampler& sampler, int count,
                  double tol) {
  if (tol <= 0.0) tol = default_tolerance(tag);
  if (count < 1) throw DomainError("verify: sweep count must be >= 1");

  SweepReport out;
  out.tag = tag;
  out.tolerance = tol;
  out.count = count;

  Rng rng = tagged_rng(sampler.seed, std::string(tag_name(tag)));
  for (int i = 0; i < count; ++i) {
    const SampledPoint pt = sampler.draw(tag, rng, i);
    try {
      VerificationReport rep = verify_identity(tag, pt.params, pt.z, tol);
      if (!rep.pass) out.failing_indices.push_back(i);
      out.reports.push_back(std::move(rep));
    } catch (const std::exception& e) {
      out.errors.push_back({i, e.what()});
    }
  }

  std::vector<double> rels;
  rels.reserve(out.reports.size());
  for (const auto& r : out.reports) {
    out.max_rel_residual = std::max(out.max_rel_residual, r.rel_residual);
    rels.push_back(r.rel_residual);
  }
  std::sort(rels.begin(), rels.end());
  if (!rels.empty()) {
    const std::size_t h = rels.size() / 2;
    out.median_rel_residual =
        (rels.size() % 2 == 1) ? rels[h] : 0.5 * (rels[h - 1] + rels[h]);
  }
  return out;
}

// -----------------------------------------------------------------------
// Closed forms vs. the extraction oracle.
// -----------------------------------------------------------------------

namespace {

// Kronecker (golden-ratio style) low-discrepancy shifts: deterministic,
// well spread, and independent of any RNG.
constexpr double kShift1 = 0.6180339887498949;
constexpr double kShift2 = 0.7548776662466927;
constexpr double kShift3 = 0.5698402909980532;

double kron(double alpha, std::size_t i) {
  const double v = 0.5 + alpha * static_cast<double>(i + 1);
  return v - std::floor(v);
}

double nudged_off_integers(double v, double margin) {
  while (dint(v) < margin) v += 0.13;
  return v;
}

// First few Taylor coefficients of (s + x)^(-ups) about x = 0; pinning
// them lets the oracle subtract the divergent dictionary exactly.
std::vector<ComplexScalar> kernel_taylor(ComplexScalar s, ComplexScalar ups,
                                         int count) {
  std::vector<ComplexScalar> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j) {
    out.push_back(binomial_complex(-ups, j) *
                  principal_power(s, -ups - cplx(static_cast<double>(j))));
  }
  return out;
}

}  // namespace

std::string_view family_name(FpiFamily family) {
  switch (family) {
    case FpiFamily::Branch:  return "branch";
    case FpiFamily::Pole:    return "pole";
    case FpiFamily::Beta:    return "beta";
    case FpiFamily::BetaLog: return "beta-log";
  }
  return "unknown";
}

FpiOracleReport verify_fpi_closed_vs_oracle(FpiFamily family,
                                            std::size_t grid_points,
                                            double tol) {
  if (tol <= 0.0) tol = (family == FpiFamily::BetaLog) ? 1e-4 : 1e-5;

  FpiOracleReport out;
  out.family = family;
  out.tolerance = tol;

  for (std::size_t i = 0; i < grid_points; ++i) {
    const double u1 = kron(kShift1, i);
    const double u2 = kron(kShift2, i);
    const double u3 = kron(kShift3, i);
    FpiOracleEntry e;

    switch (family) {
      case FpiFamily::Branch: {
        const ComplexScalar s(0.6 + 1.9 * u1, 0.6 * (u2 - 0.5));
        double ups_re = 0.6 + 1.5 * u3;
        const double lam_re = nudged_off_integers(0.35 + 2.1 * u2, 0.12);
        if (lam_re + ups_re < 1.4) ups_re = 1.4 - lam_re + 0.1;
        const ComplexScalar ups(ups_re, 0.25 * (u1 - 0.5));
        const ComplexScalar lam = cplx(lam_re);
        e.params.set("s", s);
        e.params.set("upsilon", ups);
        e.params.set("lambda", lam);
        OracleProblem prob;
        prob.integrand = [s, ups, lam](double x) {
          return std::exp(-ups * std::log(s + cplx(x)) - lam * std::log(x));
        };
        prob.lambda = lam;
        prob.taylor_coeffs = kernel_taylor(s, ups, 8);
        e.oracle = extract_finite_part(prob).finite_part;
        e.closed = fpi_branch(s, ups, lam);
        break;
      }
      case FpiFamily::Pole: {
        const long long n = static_cast<long long>(i % 3);
        const ComplexScalar s(0.6 + 1.9 * u1, 0.5 * (u2 - 0.5));
        const ComplexScalar ups(0.7 + 1.4 * u3, 0.3 * (u1 - 0.5));
        e.params.set("s", s);
        e.params.set("upsilon", ups);
        e.params.set("n", n);
        OracleProblem prob;
        const double lam_n = static_cast<double>(n + 1);
        prob.integrand = [s, ups, lam_n](double x) {
          return std::exp(-ups * std::log(s + cplx(x)) - lam_n * std::log(x));
        };
        prob.lambda = cplx(lam_n);
        prob.taylor_coeffs = kernel_taylor(s, ups, 8);
        e.oracle = extract_finite_part(prob).finite_part;
        e.closed = fpi_pole(s, ups, n);
        break;
      }
      case FpiFamily::Beta: {
        const double sig = 0.4 + 1.8 * u1;
        double rho = nudged_off_integers(0.3 + 1.9 * u2, 0.1);
        while (dint(sig - rho) < 0.1) rho = nudged_off_integers(rho + 0.13, 0.1);
        e.params.set("sigma", sig);
        e.params.set("rho", rho);
        OracleProblem prob;
        prob.integrand = [sig, rho](double y) {
          return cplx(std::exp((sig - 1.0) * std::log(y) -
                               rho * std::log1p(-y)));
        };
        prob.lambda = cplx(rho);
        prob.upper_limit = 1.0;
        prob.taylor_coeffs.reserve(8);
        for (int j = 0; j < 8; ++j) {
          prob.taylor_coeffs.push_back(cplx(parity_sign(j)) *
                                       binomial_complex(cplx(sig - 1.0), j));
        }
        e.oracle = extract_finite_part_upper(prob).finite_part;
        e.closed = beta_fpi(cplx(sig), cplx(rho));
        break;
      }
      case FpiFamily::BetaLog: {
        const double sig = 0.4 + 1.7 * u1;
        double rho = nudged_off_integers(0.35 + 1.8 * u2, 0.1);
        while (dint(sig - rho) < 0.1) rho = nudged_off_integers(rho + 0.13, 0.1);
        e.params.set("sigma", sig);
        e.params.set("rho", rho);
        OracleProblem prob;
        prob.integrand = [sig, rho](double y) {
          return cplx(std::exp((sig - 1.0) * std::log(y) -
                               rho * std::log1p(-y)) *
                      std::log(y));
        };
        prob.lambda = cplx(rho);
        prob.upper_limit = 1.0;
        e.oracle = extract_finite_part_upper(prob).finite_part;
        e.closed = beta_fpi_log(cplx(sig), cplx(rho));
        break;
      }
    }

    e.rel_residual = std::abs(e.closed - e.oracle) /
                     std::max({std::abs(e.closed), std::abs(e.oracle), 1e-300});
    out.max_rel_residual = std::max(out.max_rel_residual, e.rel_residual);
    out.entries.push_back(std::move(e));
  }

  out.pass = !out.entries.empty() && out.max_rel_residual <= tol;
  return out;
}

}  // namespace fpint
