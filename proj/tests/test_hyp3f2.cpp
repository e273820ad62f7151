#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "fpint/complex_ops.hpp"
#include "fpint/errors.hpp"
#include "fpint/fpi_oracle.hpp"
#include "fpint/gamma.hpp"
#include "fpint/hyp2f1.hpp"
#include "fpint/hyp3f2.hpp"
#include "fpint/quadrature.hpp"
#include "fpint/rng.hpp"
#include "fpint/series.hpp"
#include "fpint/warnings.hpp"

using fpint::ComplexScalar;
using fpint::Gauss2F1Params;
using fpint::kPi;
using fpint::ProgenicPieceKind;
using fpint::ThreeF2Case;
using fpint::ThreeF2Params;

namespace {

ComplexScalar cplx(double x) { return {x, 0.0}; }

double rel_err(ComplexScalar got, ComplexScalar want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

// 3F2(beta, nu, 1; beta+sigma, n; z) through the canonical series, spelled
// out as a vector call so every transform test reads the same way.
fpint::SeriesResult canonical_3f2(const ThreeF2Params& p) {
  return fpint::pfq_series({p.beta, p.nu, cplx(1)},
                           {p.beta + p.sigma, cplx(double(p.n))}, p.z);
}

}  // namespace

TEST_CASE("threef2 parameter bundle validates its domain") {
  CHECK_NOTHROW(ThreeF2Params(cplx(1.6), cplx(0.3), 2, cplx(0.9), cplx(0.5)));
  // n must be a positive integer index
  CHECK_THROWS_AS(ThreeF2Params(cplx(1.6), cplx(0.3), 0, cplx(0.9), cplx(0.5)),
                  fpint::DomainError);
  // integer nu collapses the closed form of the inner Gauss factor
  CHECK_THROWS_AS(ThreeF2Params(cplx(1.6), cplx(2), 1, cplx(0.9), cplx(0.5)),
                  fpint::DegenerateParameters);
  // the kernel exponent sigma must have positive real part
  CHECK_THROWS_AS(
      ThreeF2Params(cplx(1.6), cplx(0.3), 1, cplx(-0.5), cplx(0.5)),
      fpint::DomainError);
  // Re(beta + sigma - nu) <= 0: the representation diverges at infinity
  CHECK_THROWS_AS(ThreeF2Params(cplx(0.2), cplx(1.4), 1, cplx(0.9), cplx(0.5)),
                  fpint::DomainError);
  // beta + sigma at a nonpositive integer: the function itself is undefined
  CHECK_THROWS_AS(
      ThreeF2Params(cplx(-3.5), cplx(-2.3), 1, cplx(2.5), cplx(0.5)),
      fpint::PoleAtNonpositiveInteger);
  // complex parameters with the same real-part constraints are fine
  CHECK_NOTHROW(ThreeF2Params(ComplexScalar(1.6, 0.4), ComplexScalar(0.3, 0.2),
                              2, ComplexScalar(0.9, -0.1), cplx(0.5)));
}

TEST_CASE("sigma-nu case classification follows the integer lattice") {
  const ComplexScalar z = cplx(0.5);
  CHECK(fpint::classify_sigma_nu_case(
            ThreeF2Params(cplx(1.6), cplx(0.3), 1, cplx(0.9), z)) ==
        ThreeF2Case::NonIntegerGap);
  // sigma - nu = 0 with n = 1 puts the positive offset at m = 1
  CHECK(fpint::classify_sigma_nu_case(
            ThreeF2Params(cplx(1.7), cplx(0.4), 1, cplx(0.4), z)) ==
        ThreeF2Case::PolePositive);
  // sigma - nu = -1 with n = 2 is still the positive side (m = 1)
  CHECK(fpint::classify_sigma_nu_case(
            ThreeF2Params(cplx(2.4), cplx(1.3), 2, cplx(0.3), z)) ==
        ThreeF2Case::PolePositive);
  // sigma - nu = -1 with n = 1 is the boundary m = 0 of the other side
  CHECK(fpint::classify_sigma_nu_case(
            ThreeF2Params(cplx(2.6), cplx(1.55), 1, cplx(0.55), z)) ==
        ThreeF2Case::PoleNonpositive);
  CHECK(fpint::classify_sigma_nu_case(
            ThreeF2Params(cplx(3.2), cplx(2.45), 1, cplx(0.45), z)) ==
        ThreeF2Case::PoleNonpositive);
}

TEST_CASE("canonical series sums, cancels parameters, and guards its domain") {
  // z = 0 gives the empty product 1 for any parameter lists
  {
    const auto r = fpint::pfq_series({cplx(0.8), cplx(0.3), cplx(1)},
                                     {cplx(1.5), cplx(2)}, cplx(0));
    CHECK(r.converged);
    CHECK(std::abs(r.value - cplx(1)) == 0.0);
  }

  // an upper parameter equal to a lower one cancels: the 3F2 collapses to
  // the Gauss series of the remaining parameters
  {
    const auto three = fpint::pfq_series({cplx(0.8), cplx(0.3), cplx(1)},
                                         {cplx(0.8), cplx(2)}, cplx(0.4));
    const auto two =
        fpint::gauss_series(Gauss2F1Params(cplx(0.3), cplx(1), cplx(2),
                                           cplx(0.4)));
    CHECK(rel_err(three.value, two.value) < 1e-13);
  }
  {
    const ComplexScalar beta(1.3, 0.4);
    const auto three = fpint::pfq_series({beta, cplx(0.45), cplx(1)},
                                         {beta, cplx(3)}, cplx(0.5));
    const auto two = fpint::gauss_series(
        Gauss2F1Params(cplx(0.45), cplx(1), cplx(3), cplx(0.5)));
    CHECK(rel_err(three.value, two.value) < 1e-13);
  }

  // brute-force partial sum: sixty explicit terms of
  // 3F2(0.8, 0.3, 1; 1.5, 2; 0.4), plus a frozen high-precision value
  {
    ComplexScalar sum(0, 0);
    double t = 1.0;
    for (int k = 0; k < 60; ++k) {
      sum += cplx(t);
      t *= (0.8 + k) * (0.3 + k) / ((1.5 + k) * (2.0 + k)) * 0.4;
    }
    const auto r = fpint::pfq_series({cplx(0.8), cplx(0.3), cplx(1)},
                                     {cplx(1.5), cplx(2)}, cplx(0.4));
    CHECK(r.converged);
    CHECK(rel_err(r.value, sum) < 1e-14);
    CHECK(rel_err(r.value, cplx(1.03694882826182542342933)) < 1e-14);
  }

  // guards: too many upper parameters, a lower parameter on the
  // nonpositive lattice, and |z| past the series bound
  CHECK_THROWS_AS((void)fpint::pfq_series(
                      {cplx(0.8), cplx(0.3), cplx(0.5), cplx(1)},
                      {cplx(1.5), cplx(2)}, cplx(0.4)),
                  fpint::DomainError);
  CHECK_THROWS_AS((void)fpint::pfq_series({cplx(0.8), cplx(0.3), cplx(1)},
                                          {cplx(-2), cplx(2)}, cplx(0.4)),
                  fpint::PoleAtNonpositiveInteger);
  CHECK_THROWS_AS((void)fpint::pfq_series({cplx(0.8), cplx(0.3), cplx(1)},
                                          {cplx(1.5), cplx(2)}, cplx(0.96)),
                  fpint::DomainError);
  // fewer upper than lower parameters converges everywhere, even well
  // outside the unit disc
  CHECK_NOTHROW((void)fpint::pfq_series({cplx(0.5)}, {cplx(1.3), cplx(2.1)},
                                        cplx(50)));
  // slow geometric decay at z close to 1 with a tight term budget
  CHECK_THROWS_AS((void)fpint::pfq_series({cplx(0.9), cplx(0.8), cplx(1)},
                                          {cplx(1.1), cplx(1)}, cplx(0.95),
                                          1e-15, 60),
                  fpint::NonConvergence);
}

TEST_CASE("integral representation matches the canonical series") {
  // z = 0: the inner Gauss factor is identically 1 and the beta-type
  // integral normalizes to exactly 1
  {
    const ThreeF2Params p(cplx(1.6), cplx(0.3), 2, cplx(0.9), cplx(0));
    CHECK(rel_err(fpint::threef2_integral_direct(p), cplx(1)) < 1e-11);
  }

  // n = 1: the family collapses to a Gauss function of (beta, nu)
  {
    const ThreeF2Params p(cplx(1.6), cplx(0.3), 1, cplx(0.9), cplx(0.6));
    const auto want = fpint::gauss_series(
        Gauss2F1Params(cplx(1.6), cplx(0.3), cplx(2.5), cplx(0.6)));
    CHECK(rel_err(fpint::threef2_integral_direct(p), want.value) < 1e-10);
  }

  // n = 2 catalog point, pinned to an independent high-precision value
  {
    const ThreeF2Params p(cplx(1.6), cplx(0.3), 2, cplx(0.9), cplx(0.5));
    const ComplexScalar got = fpint::threef2_integral_direct(p);
    CHECK(rel_err(got, canonical_3f2(p).value) < 1e-9);
    CHECK(rel_err(got, cplx(1.058223264951286318911254)) < 1e-11);
  }

  // the quadrature path insists on real z in [0, 1) and Re(beta) > n - 1
  CHECK_THROWS_AS((void)fpint::threef2_integral_direct(ThreeF2Params(
                      cplx(1.6), cplx(0.3), 2, cplx(0.9),
                      ComplexScalar(0.5, 0.1))),
                  fpint::DomainError);
  CHECK_THROWS_AS((void)fpint::threef2_integral_direct(ThreeF2Params(
                      cplx(1.6), cplx(0.3), 2, cplx(0.9), cplx(1))),
                  fpint::DomainError);
  CHECK_THROWS_AS((void)fpint::threef2_integral_direct(ThreeF2Params(
                      cplx(1.6), cplx(0.3), 2, cplx(0.9), cplx(-0.1))),
                  fpint::DomainError);
  CHECK_THROWS_AS((void)fpint::threef2_integral_direct(ThreeF2Params(
                      cplx(0.8), cplx(0.3), 2, cplx(0.9), cplx(0.5))),
                  fpint::DomainError);
}

TEST_CASE("finite correction tail re-expands to the power form") {
  // n = 1: the tail is the empty sum, exactly zero
  {
    const ThreeF2Params p(cplx(1.6), cplx(0.3), 1, cplx(0.9), cplx(0.6));
    CHECK(std::abs(fpint::threef2_finite_tail(p)) == 0.0);
  }

  // n >= 2: the (z-1)^l double sum must agree with the direct power sum
  //   sum_{k=0}^{n-2} (nu-n+1)_k Gamma(k-n+beta+1) z^k /
  //                   (Gamma(k-n+beta+sigma+1) k!)
  // to pure-roundoff accuracy; the rearrangement is algebraic, so any z
  // (real, complex, outside the unit disc) must work.
  fpint::Rng rng = fpint::tagged_rng(404, "tail-reexpansion");
  for (long long n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexScalar beta(double(n - 1) + rng.uniform(0.2, 1.5),
                               rng.uniform(-0.3, 0.3));
      const ComplexScalar nu(rng.uniform(0.15, 0.85),
                             (trial % 2 == 0) ? 0.0 : rng.uniform(-0.4, 0.4));
      const ComplexScalar sigma(rng.uniform(0.3, 1.2),
                                rng.uniform(-0.2, 0.2));
      const ComplexScalar z(rng.uniform(-1.2, 1.2), rng.uniform(-0.8, 0.8));
      CAPTURE(n);
      CAPTURE(trial);
      const ThreeF2Params p(beta, nu, n, sigma, z);

      fpint::CompensatedSum power_form;
      ComplexScalar zk(1, 0);
      double fact = 1.0;
      for (long long k = 0; k + 2 <= n; ++k) {
        if (k > 0) {
          zk *= z;
          fact *= double(k);
        }
        power_form.add(fpint::GammaProd()
                           .gamma(beta + cplx(double(k - n + 1)))
                           .rgamma(beta + sigma + cplx(double(k - n + 1)))
                           .factor(fpint::pochhammer(
                               nu - cplx(double(n - 1)), k))
                           .factor(zk)
                           .divide(cplx(fact))
                           .value());
      }
      CHECK(rel_err(fpint::threef2_finite_tail(p), power_form.value()) <
            1e-12);
    }
  }
}

TEST_CASE("off-lattice transform matches the canonical series") {
  // catalog points; for n = 1 the finite tail is the empty sum, so this
  // also exercises the zero-contribution convention
  {
    const ThreeF2Params p(cplx(1.6), cplx(0.3), 1, cplx(0.9), cplx(0.6));
    const auto got = fpint::threef2_transform_general(p);
    CHECK(got.converged);
    CHECK(rel_err(got.value, canonical_3f2(p).value) < 1e-9);
    CHECK(rel_err(got.value, cplx(1.170284414312231477495696)) < 1e-12);
  }
  {
    const ThreeF2Params p(cplx(2.3), cplx(0.45), 2, cplx(0.8), cplx(0.55));
    const auto got = fpint::threef2_transform_general(p);
    CHECK(got.converged);
    CHECK(rel_err(got.value, canonical_3f2(p).value) < 1e-9);
    CHECK(rel_err(got.value, cplx(1.119983536573834012153344)) < 1e-12);
  }

  // wrong lattice case: sigma - nu integer belongs to the pole transforms
  CHECK_THROWS_AS((void)fpint::threef2_transform_general(ThreeF2Params(
                      cplx(1.7), cplx(0.4), 1, cplx(0.4), cplx(0.6))),
                  fpint::WrongCase);
  // kernel exponent beta + sigma - nu on the integer lattice is outside
  // the implemented catalog
  CHECK_THROWS_AS((void)fpint::threef2_transform_general(ThreeF2Params(
                      cplx(1.75), cplx(0.6), 1, cplx(0.85), cplx(0.6))),
                  fpint::UnsupportedCase);
  // expansion radius in (1 - z), including the expansion point itself
  CHECK_THROWS_AS((void)fpint::threef2_transform_general(ThreeF2Params(
                      cplx(1.6), cplx(0.3), 1, cplx(0.9), cplx(-0.2))),
                  fpint::DomainError);
  CHECK_THROWS_AS((void)fpint::threef2_transform_general(ThreeF2Params(
                      cplx(1.6), cplx(0.3), 1, cplx(0.9), cplx(1))),
                  fpint::DomainError);
  // the transform keeps the Re(beta) > n - 1 bound of the family
  CHECK_THROWS_AS((void)fpint::threef2_transform_general(ThreeF2Params(
                      cplx(0.9), cplx(0.3), 2, cplx(0.9), cplx(0.5))),
                  fpint::DomainError);

  // a gap sitting within the conditioning window of an integer still
  // evaluates but records a warning: the cosecant weight amplifies noise
  {
    (void)fpint::drain_warnings();
    const ThreeF2Params p(cplx(1.6), cplx(0.4), 1, cplx(0.4 + 3e-7),
                          cplx(0.6));
    (void)fpint::threef2_transform_general(p);
    CHECK(fpint::pending_warning_count() >= 1);
    const auto warned = fpint::drain_warnings();
    CHECK(!warned.empty());
    CHECK(fpint::pending_warning_count() == 0);
  }
}

TEST_CASE("positive-offset transform matches the canonical series") {
  // m = 1: the finite leading sum is the empty sum (k runs up to m - 2),
  // so the whole value comes from the logarithmic series minus the tail
  {
    const ThreeF2Params p(cplx(1.7), cplx(0.4), 1, cplx(0.4), cplx(0.6));
    const auto got = fpint::threef2_transform_pole_pos(p);
    CHECK(got.converged);
    CHECK(rel_err(got.value, canonical_3f2(p).value) < 1e-8);
    CHECK(rel_err(got.value, cplx(1.325491775769976924375545)) < 1e-12);
  }
  // m = 2 with n = 2: both the finite sum and the tail are non-empty
  {
    const ThreeF2Params p(cplx(2.4), cplx(0.3), 2, cplx(0.3), cplx(0.5));
    const auto got = fpint::threef2_transform_pole_pos(p);
    CHECK(got.converged);
    CHECK(rel_err(got.value, canonical_3f2(p).value) < 1e-8);
    CHECK(rel_err(got.value, cplx(1.085238704325555155252616)) < 1e-12);
  }

  // off-lattice parameters belong to the general transform
  CHECK_THROWS_AS((void)fpint::threef2_transform_pole_pos(ThreeF2Params(
                      cplx(1.6), cplx(0.3), 1, cplx(0.9), cplx(0.6))),
                  fpint::WrongCase);
  // a nonpositive offset belongs to the mirror transform
  CHECK_THROWS_AS((void)fpint::threef2_transform_pole_pos(ThreeF2Params(
                      cplx(2.6), cplx(1.55), 1, cplx(0.55), cplx(0.6))),
                  fpint::WrongCase);
  // integer beta puts the kernel exponent on the lattice: not implemented
  CHECK_THROWS_AS((void)fpint::threef2_transform_pole_pos(ThreeF2Params(
                      cplx(2), cplx(0.4), 1, cplx(0.4), cplx(0.6))),
                  fpint::UnsupportedCase);
  CHECK_THROWS_AS((void)fpint::threef2_transform_pole_pos(ThreeF2Params(
                      cplx(1.7), cplx(0.4), 1, cplx(0.4), cplx(1))),
                  fpint::DomainError);
}

TEST_CASE("negative-offset transform matches the canonical series") {
  // boundary offset m = 0
  {
    const ThreeF2Params p(cplx(2.6), cplx(1.55), 1, cplx(0.55), cplx(0.6));
    const auto got = fpint::threef2_transform_pole_neg(p);
    CHECK(got.converged);
    CHECK(rel_err(got.value, canonical_3f2(p).value) < 1e-8);
    CHECK(rel_err(got.value, cplx(3.115768592196964373922906)) < 1e-12);
  }
  // m = 1
  {
    const ThreeF2Params p(cplx(3.2), cplx(2.45), 1, cplx(0.45), cplx(0.55));
    const auto got = fpint::threef2_transform_pole_neg(p);
    CHECK(got.converged);
    CHECK(rel_err(got.value, canonical_3f2(p).value) < 1e-8);
    CHECK(rel_err(got.value, cplx(5.444014559159980788889264)) < 1e-12);
  }
  // n = 2 with m = 0
  {
    const ThreeF2Params p(cplx(3.1), cplx(2.4), 2, cplx(0.4), cplx(0.5));
    const auto got = fpint::threef2_transform_pole_neg(p);
    CHECK(got.converged);
    CHECK(rel_err(got.value, canonical_3f2(p).value) < 1e-8);
    CHECK(rel_err(got.value, cplx(2.088694737537746074355454)) < 1e-12);
  }

  // digamma-offset discrimination: the series carries psi(k + m + 2); the
  // neighboring reading psi(k + m + 1) shifts the logarithmic series by
  //   (-1)^m Gamma(beta-n+1) / (Gamma(beta-m-n) Gamma(nu-m-n)) *
  //     sum_k (beta-n+1)_k (nu+1-n)_k (1-z)^k / ((k+m+1)! k! (k+m+1))
  // divided by the family prefactor, which is an O(1) mismatch
  {
    const ThreeF2Params p(cplx(3.2), cplx(2.45), 1, cplx(0.45), cplx(0.55));
    const long long m = 1;
    const ComplexScalar w = cplx(1) - p.z;
    fpint::CompensatedSum shift;
    ComplexScalar term = cplx(1.0 / 2.0);  // k = 0: 1 / (m+1)!
    for (long long k = 0; k < 200; ++k) {
      if (k > 0) {
        term *= (p.beta - cplx(double(p.n)) + cplx(double(k))) *
                (p.nu + cplx(1.0 - double(p.n)) + cplx(double(k - 1))) * w /
                (cplx(double(k)) * cplx(double(k + m + 1)));
      }
      shift.add(term / cplx(double(k + m + 1)));
      if (std::abs(term) < 1e-18) break;
    }
    const ComplexScalar front =
        fpint::GammaProd()
            .gamma(p.beta - cplx(double(p.n - 1)))
            .rgamma(p.beta - cplx(double(m + p.n)))
            .rgamma(p.nu - cplx(double(m + p.n)))
            .value() *
        cplx((m % 2 == 0) ? 1.0 : -1.0);
    // family prefactor for n = 1 is Gamma(beta) / Gamma(beta+sigma)
    const ComplexScalar pref = fpint::GammaProd()
                                   .gamma(p.beta)
                                   .rgamma(p.beta + p.sigma)
                                   .value();
    const ComplexScalar value =
        fpint::threef2_transform_pole_neg(p).value;
    const ComplexScalar alt = value - front * shift.value() / pref;
    const ComplexScalar want = canonical_3f2(p).value;
    CHECK(rel_err(value, want) < 1e-12);
    CHECK(rel_err(alt, want) > 1e-3);
  }

  // wrong-lattice rejections mirror the positive side
  CHECK_THROWS_AS((void)fpint::threef2_transform_pole_neg(ThreeF2Params(
                      cplx(1.6), cplx(0.3), 1, cplx(0.9), cplx(0.6))),
                  fpint::WrongCase);
  CHECK_THROWS_AS((void)fpint::threef2_transform_pole_neg(ThreeF2Params(
                      cplx(1.7), cplx(0.4), 1, cplx(0.4), cplx(0.6))),
                  fpint::WrongCase);
  CHECK_THROWS_AS((void)fpint::threef2_transform_pole_neg(ThreeF2Params(
                      cplx(3), cplx(2.45), 1, cplx(0.45), cplx(0.55))),
                  fpint::UnsupportedCase);
}

TEST_CASE("progenic pieces match the extraction oracle and their anchors") {
  // frozen high-precision anchors for one representative of each kind
  {
    const ThreeF2Params p(cplx(1.6), cplx(0.3), 1, cplx(0.9), cplx(0.45));
    CHECK(rel_err(
              fpint::progenic_3f2_pieces(p, ProgenicPieceKind::PlainBranch),
              cplx(4.562790808707472061489014)) < 1e-12);
  }
  {
    const ThreeF2Params p(cplx(2.6), cplx(0.45), 1, cplx(1.45), cplx(0.45));
    CHECK(rel_err(fpint::progenic_3f2_pieces(
                      p, ProgenicPieceKind::LogPolePositive),
                  cplx(-4.851424193419109371319052)) < 1e-12);
  }
  {
    const ThreeF2Params p(cplx(2.6), cplx(1.55), 1, cplx(0.55), cplx(0.6));
    CHECK(rel_err(fpint::progenic_3f2_pieces(
                      p, ProgenicPieceKind::LogPoleNonpositive),
                  cplx(-0.8111239232832482662412176)) < 1e-12);
  }

  // definition-level referee: each closed-form piece against the
  // epsilon-extraction of its own finite-part integral over (0, 1),
  //   s^(beta-n) (S-s)^(n-nu-1) (1-s)^-(beta+sigma-nu) [* ln s] ds,
  // singular at the upper endpoint with strength beta + sigma - nu
  {
    // plain kind, n = 1: exponents 0.6, -0.3, strength 2.2
    const ThreeF2Params p(cplx(1.6), cplx(0.3), 1, cplx(0.9), cplx(0.45));
    const ComplexScalar got =
        fpint::progenic_3f2_pieces(p, ProgenicPieceKind::PlainBranch);
    const double S = 1.0 / 0.55;
    fpint::OracleProblem prob;
    prob.integrand = [S](double s) {
      return cplx(std::pow(s, 0.6) * std::pow(S - s, -0.3) *
                  std::pow(1.0 - s, -2.2));
    };
    prob.lambda = cplx(2.2);
    prob.upper_limit = 1.0;
    CHECK(rel_err(got, fpint::extract_finite_part_upper(prob).finite_part) <
          1e-5);
  }
  {
    // plain kind, n = 2: exponents 0.3, 0.55, strength 2.65; check the
    // extraction is stable against its initial cut width as well
    const ThreeF2Params p(cplx(2.3), cplx(0.45), 2, cplx(0.8), cplx(0.55));
    const ComplexScalar got =
        fpint::progenic_3f2_pieces(p, ProgenicPieceKind::PlainBranch);
    const double S = 1.0 / 0.45;
    fpint::OracleProblem prob;
    prob.integrand = [S](double s) {
      return cplx(std::pow(s, 0.3) * std::pow(S - s, 0.55) *
                  std::pow(1.0 - s, -2.65));
    };
    prob.lambda = cplx(2.65);
    prob.upper_limit = 1.0;
    std::vector<ComplexScalar> fps;
    for (const double eps0 : {2e-2, 1e-2}) {
      fps.push_back(fpint::extract_finite_part_upper(prob, eps0).finite_part);
      CHECK(rel_err(got, fps.back()) < 1e-5);
    }
    CHECK(std::abs(fps[0] - fps[1]) <
          1e-5 * std::max(1.0, std::abs(fps[0])));
  }
  {
    // logarithmic kind on the positive offset, m = 1: the finite leading
    // sum is empty, the digamma series carries everything
    const ThreeF2Params p(cplx(1.6), cplx(0.45), 1, cplx(0.45), cplx(0.45));
    const ComplexScalar got =
        fpint::progenic_3f2_pieces(p, ProgenicPieceKind::LogPolePositive);
    const double S = 1.0 / 0.55;
    fpint::OracleProblem prob;
    prob.integrand = [S](double s) {
      return cplx(std::pow(s, 0.6) * std::pow(S - s, -0.45) *
                  std::pow(1.0 - s, -1.6) * std::log(s));
    };
    prob.lambda = cplx(1.6);
    prob.upper_limit = 1.0;
    CHECK(rel_err(got, fpint::extract_finite_part_upper(prob).finite_part) <
          1e-5);
  }
  {
    // logarithmic kind on the positive offset, m = 2: the alternating
    // finite sum is active, pinning its sign against the definition
    const ThreeF2Params p(cplx(1.35), cplx(0.45), 1, cplx(1.45), cplx(0.45));
    const ComplexScalar got =
        fpint::progenic_3f2_pieces(p, ProgenicPieceKind::LogPolePositive);
    const double S = 1.0 / 0.55;
    fpint::OracleProblem prob;
    prob.integrand = [S](double s) {
      return cplx(std::pow(s, 0.35) * std::pow(S - s, -0.45) *
                  std::pow(1.0 - s, -2.35) * std::log(s));
    };
    prob.lambda = cplx(2.35);
    prob.upper_limit = 1.0;
    CHECK(rel_err(got, fpint::extract_finite_part_upper(prob).finite_part) <
          1e-5);
  }
  {
    // logarithmic kind on the nonpositive offset, m = 0
    const ThreeF2Params p(cplx(2.6), cplx(1.55), 1, cplx(0.55), cplx(0.6));
    const ComplexScalar got =
        fpint::progenic_3f2_pieces(p, ProgenicPieceKind::LogPoleNonpositive);
    const double S = 1.0 / 0.4;
    fpint::OracleProblem prob;
    prob.integrand = [S](double s) {
      return cplx(std::pow(s, 1.6) * std::pow(S - s, -1.55) *
                  std::pow(1.0 - s, -1.6) * std::log(s));
    };
    prob.lambda = cplx(1.6);
    prob.upper_limit = 1.0;
    CHECK(rel_err(got, fpint::extract_finite_part_upper(prob).finite_part) <
          1e-5);
  }

  // x -> 1: the (1-x)^(nu+1-n) prefactor drives each piece to zero on a
  // pure power law; the ratio across two widths recovers the exponent
  {
    const double w1 = 1e-4, w2 = 1e-6;
    const ThreeF2Params pa(cplx(1.6), cplx(0.3), 1, cplx(0.9), cplx(1 - w1));
    const ThreeF2Params pb(cplx(1.6), cplx(0.3), 1, cplx(0.9), cplx(1 - w2));
    const double ra =
        std::abs(fpint::progenic_3f2_pieces(pa,
                                            ProgenicPieceKind::PlainBranch));
    const double rb =
        std::abs(fpint::progenic_3f2_pieces(pb,
                                            ProgenicPieceKind::PlainBranch));
    CHECK(rb < ra);
    CHECK(std::abs(ra / rb / std::pow(w1 / w2, 0.3) - 1.0) < 0.05);
  }
  {
    const double w1 = 1e-4, w2 = 1e-6;
    const ThreeF2Params pa(cplx(2.6), cplx(1.55), 1, cplx(0.55),
                           cplx(1 - w1));
    const ThreeF2Params pb(cplx(2.6), cplx(1.55), 1, cplx(0.55),
                           cplx(1 - w2));
    const double ra = std::abs(fpint::progenic_3f2_pieces(
        pa, ProgenicPieceKind::LogPoleNonpositive));
    const double rb = std::abs(fpint::progenic_3f2_pieces(
        pb, ProgenicPieceKind::LogPoleNonpositive));
    CHECK(rb < ra);
    CHECK(std::abs(ra / rb / std::pow(w1 / w2, 1.55) - 1.0) < 0.05);
  }

  // guards: the abscissa must be real inside (0, 1), the kind must match
  // the lattice case, and integer beta is outside the catalog
  CHECK_THROWS_AS((void)fpint::progenic_3f2_pieces(
                      ThreeF2Params(cplx(1.6), cplx(0.3), 1, cplx(0.9),
                                    ComplexScalar(0.45, 0.1)),
                      ProgenicPieceKind::PlainBranch),
                  fpint::DomainError);
  CHECK_THROWS_AS((void)fpint::progenic_3f2_pieces(
                      ThreeF2Params(cplx(1.6), cplx(0.3), 1, cplx(0.9),
                                    cplx(1.2)),
                      ProgenicPieceKind::PlainBranch),
                  fpint::DomainError);
  CHECK_THROWS_AS((void)fpint::progenic_3f2_pieces(
                      ThreeF2Params(cplx(1.6), cplx(0.3), 1, cplx(0.9),
                                    cplx(0)),
                      ProgenicPieceKind::PlainBranch),
                  fpint::DomainError);
  CHECK_THROWS_AS((void)fpint::progenic_3f2_pieces(
                      ThreeF2Params(cplx(1.7), cplx(0.4), 1, cplx(0.4),
                                    cplx(0.45)),
                      ProgenicPieceKind::PlainBranch),
                  fpint::WrongCase);
  CHECK_THROWS_AS((void)fpint::progenic_3f2_pieces(
                      ThreeF2Params(cplx(1.6), cplx(0.3), 1, cplx(0.9),
                                    cplx(0.45)),
                      ProgenicPieceKind::LogPolePositive),
                  fpint::WrongCase);
  CHECK_THROWS_AS((void)fpint::progenic_3f2_pieces(
                      ThreeF2Params(cplx(1.7), cplx(0.4), 1, cplx(0.4),
                                    cplx(0.45)),
                      ProgenicPieceKind::LogPoleNonpositive),
                  fpint::WrongCase);
  CHECK_THROWS_AS((void)fpint::progenic_3f2_pieces(
                      ThreeF2Params(cplx(2), cplx(0.4), 1, cplx(0.4),
                                    cplx(0.45)),
                      ProgenicPieceKind::LogPolePositive),
                  fpint::UnsupportedCase);
  CHECK_THROWS_AS((void)fpint::progenic_3f2_pieces(
                      ThreeF2Params(cplx(1.75), cplx(0.6), 1, cplx(0.85),
                                    cplx(0.45)),
                      ProgenicPieceKind::PlainBranch),
                  fpint::UnsupportedCase);
}

TEST_CASE("piece recombination reproduces the semi-infinite quadrature") {
  // The off-lattice branch piece recombines with a closed Gauss factor to
  // the full integral over (0, inf) of
  //   s^(beta-n) (S+s)^(n-nu-1) (1+s)^-(beta+sigma-nu) ds,  S = 1/(1-x):
  //   quad = ft + (-1)^(n-1) sin(pi(beta+sigma-nu))/sin(pi(sigma-nu)) * piece
  // with
  //   ft = (-1)^n pi Gamma(sigma) (1-x)^sigma /
  //        (sin(pi(sigma-nu)) Gamma(1+nu-n) Gamma(sigma-nu+n)) *
  //        F(sigma, beta+sigma-nu; sigma-nu+n; 1-x).
  const auto quad_full = [](const ThreeF2Params& p) {
    const double x = p.z.real();
    const double S = 1.0 / (1.0 - x);
    const double eb = (p.beta - cplx(double(p.n))).real();
    const double ev = (cplx(double(p.n)) - p.nu - cplx(1)).real();
    const double el = (p.beta + p.sigma - p.nu).real();
    auto f = [=](double s, double) {
      return cplx(std::exp(eb * std::log(s) + ev * std::log(S + s) -
                           el * std::log1p(s)));
    };
    return fpint::tanh_sinh_semi_infinite(f, 0.0).value;
  };
  const auto recombined = [](const ThreeF2Params& p) {
    const ComplexScalar w = cplx(1) - p.z;
    const ComplexScalar gap = p.sigma - p.nu;
    const ComplexScalar ft =
        cplx((p.n % 2 == 0) ? 1.0 : -1.0) * cplx(kPi) *
        fpint::GammaProd()
            .gamma(p.sigma)
            .rgamma(cplx(1) + p.nu - cplx(double(p.n)))
            .rgamma(gap + cplx(double(p.n)))
            .power(w, p.sigma)
            .value() /
        fpint::sin_pi(gap) *
        fpint::gauss_series(Gauss2F1Params(p.sigma, p.beta + p.sigma - p.nu,
                                           gap + cplx(double(p.n)), w))
            .value;
    const ComplexScalar piece =
        fpint::progenic_3f2_pieces(p, ProgenicPieceKind::PlainBranch);
    return ft + cplx((p.n % 2 == 0) ? -1.0 : 1.0) *
                    fpint::sin_pi(p.beta + p.sigma - p.nu) /
                    fpint::sin_pi(gap) * piece;
  };

  // frozen high-precision anchor for the quadrature side itself
  {
    const ThreeF2Params p(cplx(2.6), cplx(0.45), 2, cplx(0.8), cplx(0.45));
    const ComplexScalar quad = quad_full(p);
    CHECK(rel_err(quad, cplx(0.953136047217920478137367)) < 1e-10);
    CHECK(rel_err(recombined(p), quad) < 1e-10);
  }

  // random draws across n = 1..3
  fpint::Rng rng = fpint::tagged_rng(404, "piece-recombination");
  int done = 0;
  while (done < 30) {
    const long long n = 1 + (long long)(done % 3);
    const ComplexScalar beta = cplx(double(n - 1) + rng.uniform(0.3, 1.5));
    const ComplexScalar nu = cplx(rng.uniform(0.15, 0.85));
    const ComplexScalar sigma = cplx(rng.uniform(0.25, 1.2));
    const double x = rng.uniform(0.1, 0.9);
    if (fpint::distance_to_nearest_integer(sigma - nu) < 0.05) continue;
    if (fpint::distance_to_nearest_integer(beta + sigma - nu) < 0.05)
      continue;
    if ((beta + sigma - nu).real() < 0.15) continue;
    CAPTURE(done);
    const ThreeF2Params p(beta, nu, n, sigma, cplx(x));
    CHECK(rel_err(recombined(p), quad_full(p)) < 1e-8);
    ++done;
  }
  CHECK(done == 30);
}

TEST_CASE("transform sweeps agree with the canonical series across draws") {
  int checked = 0;

  // off-lattice gap
  {
    fpint::Rng rng = fpint::tagged_rng(404, "sweep-3f2-general");
    int done = 0;
    while (done < 100) {
      const long long n = 1 + (long long)(done % 3);
      ComplexScalar beta = cplx(double(n - 1) + rng.uniform(0.2, 1.6));
      ComplexScalar nu = cplx(rng.uniform(0.1, 0.9));
      ComplexScalar sigma = cplx(rng.uniform(0.2, 1.4));
      const double z = rng.uniform(0.45, 0.7);
      if (done % 4 == 3) {
        beta += ComplexScalar(0, rng.uniform(-0.3, 0.3));
        nu += ComplexScalar(0, rng.uniform(-0.2, 0.2));
        sigma += ComplexScalar(0, rng.uniform(-0.2, 0.2));
      }
      if (fpint::distance_to_nearest_integer(sigma - nu) < 0.05) continue;
      if (fpint::distance_to_nearest_integer(beta + sigma - nu) < 0.05)
        continue;
      if ((beta + sigma - nu).real() < 0.15) continue;
      CAPTURE(done);
      const ThreeF2Params p(beta, nu, n, sigma, cplx(z));
      CHECK(rel_err(fpint::threef2_transform_general(p).value,
                    canonical_3f2(p).value) < 1e-8);
      ++done;
      ++checked;
    }
  }

  // positive offsets m = 1..3
  {
    fpint::Rng rng = fpint::tagged_rng(404, "sweep-3f2-pole-pos");
    int done = 0;
    while (done < 100) {
      const long long n = 1 + (long long)(done % 3);
      const long long m = 1 + (long long)rng.below(3);
      const double lift = double(n > m ? n - m : 0);
      ComplexScalar nu = cplx(lift + rng.uniform(0.15, 0.85));
      ComplexScalar beta = cplx(lift + rng.uniform(0.2, 1.7));
      const double z = rng.uniform(0.45, 0.7);
      if (done % 4 == 3) {
        beta += ComplexScalar(0, rng.uniform(-0.25, 0.25));
        nu += ComplexScalar(0, rng.uniform(-0.2, 0.2));
      }
      if (fpint::distance_to_nearest_integer(beta) < 0.05) continue;
      if ((beta + cplx(double(m - n))).real() < 0.15) continue;
      const ComplexScalar sigma = nu + cplx(double(m - n));
      if (sigma.real() < 0.1) continue;
      CAPTURE(done);
      const ThreeF2Params p(beta, nu, n, sigma, cplx(z));
      CHECK(fpint::classify_sigma_nu_case(p) == ThreeF2Case::PolePositive);
      CHECK(rel_err(fpint::threef2_transform_pole_pos(p).value,
                    canonical_3f2(p).value) < 1e-8);
      ++done;
      ++checked;
    }
  }

  // nonpositive offsets m = 0..2
  {
    fpint::Rng rng = fpint::tagged_rng(404, "sweep-3f2-pole-neg");
    int done = 0;
    while (done < 100) {
      const long long n = 1 + (long long)(done % 2);
      const long long m = (long long)rng.below(3);
      ComplexScalar nu = cplx(double(m + n) + rng.uniform(0.15, 0.85));
      ComplexScalar beta = cplx(double(m + n) + rng.uniform(0.2, 1.7));
      const double z = rng.uniform(0.45, 0.7);
      if (done % 4 == 3) {
        beta += ComplexScalar(0, rng.uniform(-0.25, 0.25));
        nu += ComplexScalar(0, rng.uniform(-0.2, 0.2));
      }
      if (fpint::distance_to_nearest_integer(beta) < 0.05) continue;
      const ComplexScalar sigma = nu - cplx(double(m + n));
      CAPTURE(done);
      const ThreeF2Params p(beta, nu, n, sigma, cplx(z));
      CHECK(fpint::classify_sigma_nu_case(p) == ThreeF2Case::PoleNonpositive);
      CHECK(rel_err(fpint::threef2_transform_pole_neg(p).value,
                    canonical_3f2(p).value) < 1e-8);
      ++done;
      ++checked;
    }
  }

  CHECK(checked == 300);
  // the sweeps stay clear of every conditioning window
  CHECK(fpint::pending_warning_count() == 0);
}

TEST_CASE("integral representation agrees across draws") {
  fpint::Rng rng = fpint::tagged_rng(404, "sweep-3f2-integral");
  int done = 0;
  while (done < 50) {
    const long long n = 1 + (long long)(done % 3);
    const ComplexScalar beta = cplx(double(n - 1) + rng.uniform(0.3, 1.6));
    const ComplexScalar nu = cplx(rng.uniform(0.15, 0.85));
    const ComplexScalar sigma = cplx(rng.uniform(0.3, 1.3));
    const double z = rng.uniform(0.05, 0.9);
    if ((beta + sigma - nu).real() < 0.1) continue;
    CAPTURE(done);
    const ThreeF2Params p(beta, nu, n, sigma, cplx(z));
    CHECK(rel_err(fpint::threef2_integral_direct(p),
                  canonical_3f2(p).value) < 1e-9);
    ++done;
  }
  CHECK(done == 50);
}
