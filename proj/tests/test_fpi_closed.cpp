// Closed-form finite-part integrals: frozen values, constructor
// validation, and — on the parameter region where the integrals converge
// classically — agreement with direct quadrature.

#include <cmath>
#include <complex>

#include "doctest.h"
#include "fpint/fpi_closed.hpp"
#include "fpint/gamma.hpp"
#include "fpint/quadrature.hpp"
#include "fpint/rng.hpp"
#include "fpint/warnings.hpp"

using fpint::ComplexScalar;
using fpint::kPi;

namespace {

double rel_err(ComplexScalar got, ComplexScalar want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

}  // namespace

TEST_CASE("branch family: frozen values") {
  CHECK(rel_err(fpint::fpi_branch({1, 0}, {1, 0}, {0.5, 0}), {kPi, 0}) <
        1e-14);
  CHECK(rel_err(fpint::fpi_branch({4, 0}, {1, 0}, {0.5, 0}), {kPi / 2, 0}) <
        1e-14);
  CHECK(rel_err(fpint::fpi_branch({1, 0}, {0.5, 0}, {1.5, 0}), {-2.0, 0}) <
        1e-14);
}

TEST_CASE("branch family equals the cosecant form where both apply") {
  fpint::Rng rng(1001ULL);
  for (int k = 0; k < 100; ++k) {
    const ComplexScalar s(rng.uniform(0.3, 3.0), rng.uniform(-1.5, 1.5));
    const ComplexScalar lam(rng.uniform(0.05, 2.8), rng.uniform(-0.8, 0.8));
    const ComplexScalar ups(rng.uniform(0.3, 3.0), rng.uniform(-0.8, 0.8));
    if (fpint::near_integer(lam, 0.05)) continue;
    if ((lam + ups).real() <= 1.05) continue;
    const ComplexScalar got = fpint::fpi_branch(s, ups, lam);
    const ComplexScalar one(1.0, 0.0);
    fpint::GammaProd p;
    p.factor({kPi, 0.0})
        .gamma(lam + ups - one)
        .power(s, one - lam - ups)
        .divide(fpint::sin_pi(lam))
        .rgamma(ups)
        .rgamma(lam);
    CHECK(rel_err(got, p.value()) < 1e-12);
  }
}

TEST_CASE("branch family matches quadrature on the convergent region") {
  fpint::Rng rng(2002ULL);
  int done = 0;
  while (done < 120) {
    const ComplexScalar s(rng.uniform(0.4, 2.5), rng.uniform(-1.0, 1.0));
    const ComplexScalar lam(rng.uniform(0.1, 0.9), rng.uniform(-0.5, 0.5));
    const ComplexScalar ups(rng.uniform(0.5, 2.5), rng.uniform(-0.5, 0.5));
    if ((lam + ups).real() <= 1.15) continue;
    if (fpint::near_integer(lam, 0.02)) continue;
    auto f = [&](double x, double) {
      return std::exp(-ups * std::log(ComplexScalar(s.real() + x, s.imag())) -
                      lam * std::log(x));
    };
    const auto q = fpint::tanh_sinh_semi_infinite(f, 0.0);
    const ComplexScalar closed = fpint::fpi_branch(s, ups, lam);
    CHECK(rel_err(closed, q.value) < 1e-9);
    ++done;
  }
}

TEST_CASE("pole family: frozen values") {
  CHECK(fpint::fpi_pole({1, 0}, {1, 0}, 0) == ComplexScalar(0.0, 0.0));
  CHECK(rel_err(fpint::fpi_pole({2, 0}, {1, 0}, 0), {std::log(2.0) / 2, 0}) <
        1e-14);
  CHECK(rel_err(fpint::fpi_pole({1, 0}, {2, 0}, 1), {1.0, 0}) < 1e-14);
}

TEST_CASE("pole family: terminating Pochhammer gives an exact zero") {
  // upsilon = -2, n = 5: the factor (-2)(-1)(0)(1)(2) kills the value.
  CHECK(fpint::fpi_pole({1.7, 0.3}, {-2, 0}, 5) == ComplexScalar(0.0, 0.0));
}

TEST_CASE("beta family: frozen values") {
  CHECK(rel_err(fpint::beta_fpi({1, 0}, {0.5, 0}), {2.0, 0}) < 1e-14);
  CHECK(fpint::beta_fpi({0.5, 0}, {1.5, 0}) == ComplexScalar(0.0, 0.0));
  CHECK(rel_err(fpint::beta_fpi({1.5, 0}, {0.5, 0}), {kPi / 2, 0}) < 1e-14);
}

TEST_CASE("beta family with log factor: frozen values") {
  CHECK(rel_err(fpint::beta_fpi_log({1, 0}, {0.5, 0}),
                {4.0 * std::log(2.0) - 4.0, 0}) < 1e-14);
  CHECK(rel_err(fpint::beta_fpi_log({0.5, 0}, {1.5, 0}), {-2.0 * kPi, 0}) <
        1e-14);
  // sigma = 2, rho = 1/2: value pi Gamma(2) (psi(2) - psi(5/2)) /
  // (Gamma(1/2) Gamma(5/2))
  const ComplexScalar want =
      kPi * (fpint::digamma({2, 0}) - fpint::digamma({2.5, 0})) /
      (fpint::gamma({0.5, 0}) * fpint::gamma({2.5, 0}));
  CHECK(rel_err(fpint::beta_fpi_log({2, 0}, {0.5, 0}), want) < 1e-13);
}

TEST_CASE("exact zeros at sigma - rho in the negative integers") {
  fpint::Rng rng(3003ULL);
  for (int k = 0; k < 20; ++k) {
    const double sig = rng.uniform(0.2, 2.0);
    const long long gap = 1 + static_cast<long long>(rng.below(4));
    const ComplexScalar sigma(sig, 0.0);
    const ComplexScalar rho(sig + static_cast<double>(gap), 0.0);
    if (fpint::is_positive_integer(rho)) continue;
    CHECK(std::abs(fpint::beta_fpi(sigma, rho)) <= 1e-12);
  }
}

TEST_CASE("beta families match quadrature on the convergent region") {
  fpint::Rng rng(4004ULL);
  int done = 0;
  while (done < 120) {
    const ComplexScalar sigma(rng.uniform(0.15, 2.5), rng.uniform(-0.7, 0.7));
    const ComplexScalar rho(rng.uniform(0.1, 0.85), rng.uniform(-0.5, 0.5));
    auto base = [&](double fy0, double fy1) {
      // y^(sigma-1) (1-y)^(-rho) from exact distances to both endpoints
      return std::exp((sigma - ComplexScalar(1, 0)) * std::log(fy0) -
                      rho * std::log(fy1));
    };
    const auto q0 = fpint::tanh_sinh_distances(base, 0.0, 1.0);
    CHECK(rel_err(fpint::beta_fpi(sigma, rho), q0.value) < 1e-9);

    auto logged = [&](double fy0, double fy1) {
      return base(fy0, fy1) * std::log(fy0);
    };
    const auto q1 = fpint::tanh_sinh_distances(logged, 0.0, 1.0);
    CHECK(rel_err(fpint::beta_fpi_log(sigma, rho), q1.value) < 1e-9);
    ++done;
  }
}

TEST_CASE("log variant is the sigma-derivative of the plain variant") {
  fpint::Rng rng(5005ULL);
  const double h = 1e-5;
  for (int k = 0; k < 60; ++k) {
    const ComplexScalar sigma(rng.uniform(0.3, 3.0), rng.uniform(-1.0, 1.0));
    const ComplexScalar rho(rng.uniform(0.2, 2.7), rng.uniform(-1.0, 1.0));
    if (fpint::is_positive_integer(rho) || fpint::near_integer(rho, 0.02)) {
      continue;
    }
    // keep the finite-difference stencil away from the degenerate line
    if (fpint::near_integer(sigma - rho, 0.01) ||
        fpint::is_integer(sigma - rho)) {
      continue;
    }
    const ComplexScalar fd =
        (fpint::beta_fpi(sigma + ComplexScalar(h, 0), rho) -
         fpint::beta_fpi(sigma - ComplexScalar(h, 0), rho)) /
        ComplexScalar(2 * h, 0);
    CHECK(rel_err(fpint::beta_fpi_log(sigma, rho), fd) < 1e-7);
  }
}

TEST_CASE("branch value grows like csc(pi lambda) toward integer lambda") {
  const ComplexScalar s(1.3, 0.0), ups(1.4, 0.0);
  for (long long n : {1LL, 2LL}) {
    const double v3 =
        std::abs(fpint::fpi_branch(s, ups, {static_cast<double>(n) + 1e-3, 0}));
    const double v4 =
        std::abs(fpint::fpi_branch(s, ups, {static_cast<double>(n) + 1e-4, 0}));
    const double ratio = v4 / v3;
    CHECK(ratio > 8.0);
    CHECK(ratio < 12.5);
  }
}

TEST_CASE("parameter validation") {
  using fpint::DomainError;
  CHECK_THROWS_AS(fpint::FpiBranchSpec({-1, 0}, {1, 0}, {0.5, 0}),
                  DomainError);
  CHECK_THROWS_AS(fpint::FpiBranchSpec({1, 0}, {0, 0}, {0.5, 0}), DomainError);
  CHECK_THROWS_AS(fpint::FpiBranchSpec({1, 0}, {1, 0}, {2.0, 0}), DomainError);
  CHECK_THROWS_AS(fpint::FpiBranchSpec({1, 0}, {1, 0}, {-0.5, 0}),
                  DomainError);
  CHECK_THROWS_AS(fpint::FpiBranchSpec({1, 0}, {0.25, 0}, {0.5, 0}),
                  DomainError);
  CHECK_THROWS_AS(fpint::FpiPoleSpec({1, 0}, {1, 0}, -1), DomainError);
  CHECK_THROWS_AS(fpint::FpiPoleSpec({1, 0}, {-3, 0}, 2), DomainError);
  CHECK_THROWS_AS(fpint::BetaFpiSpec({-0.5, 0}, {0.5, 0}), DomainError);
  CHECK_THROWS_AS(fpint::BetaFpiSpec({1, 0}, {2, 0}), DomainError);
  // the raw branch overload accepts the continuation to Re(lambda) <= 0
  CHECK_NOTHROW((void)fpint::fpi_branch({1, 0}, {3, 0}, {-0.5, 0}));
}

TEST_CASE("branch family records a conditioning warning near integer lambda") {
  (void)fpint::drain_warnings();
  const ComplexScalar lam(1.5, 0.0);
  (void)fpint::fpi_branch({1.2, 0}, {1.1, 0}, lam);
  CHECK(fpint::pending_warning_count() == 0);

  const ComplexScalar close(2.0 + 4e-7, 0.0);
  (void)fpint::fpi_branch({1.2, 0}, {1.1, 0}, close);
  const auto warnings = fpint::drain_warnings();
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].distance_to_integer > 1e-8);
  CHECK(warnings[0].distance_to_integer < 1e-5);
}
