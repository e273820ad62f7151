#include "fpint/gamma.hpp"

#include <array>
#include <cmath>

namespace fpint {

namespace {

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set, the
// same one Boost.Math ships).  Relative accuracy ~1e-15 on the right
// half-plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosC = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kHalfLog2Pi = 0.918938533204672741780329736405617639;

// Right-half-plane core: valid for Re z >= 1/2.
ComplexScalar log_gamma_core(ComplexScalar z) {
  ComplexScalar s(kLanczosC[0], 0.0);
  for (std::size_t k = 1; k < kLanczosC.size(); ++k) {
    s += kLanczosC[k] / (z + ComplexScalar(static_cast<double>(k) - 1.0, 0.0));
  }
  const ComplexScalar t = z + ComplexScalar(kLanczosG - 0.5, 0.0);
  return ComplexScalar(kHalfLog2Pi, 0.0) +
         (z - ComplexScalar(0.5, 0.0)) * std::log(t) - t + std::log(s);
}

// Bernoulli numbers B_2 .. B_14 over their asymptotic-series denominators:
// psi(z) ~ ln z - 1/(2z) - sum_n B_{2n} / (2n z^{2n}).
constexpr std::array<double, 7> kDigammaAsym = {
    1.0 / 12.0,   -1.0 / 120.0,  1.0 / 252.0,    -1.0 / 240.0,
    1.0 / 132.0,  -691.0 / 32760.0,  1.0 / 12.0,
};

}  // namespace

ComplexScalar log_gamma(ComplexScalar z, double int_tol) {
  if (is_nonpositive_integer(z, int_tol)) {
    throw PoleAtNonpositiveInteger("log_gamma: pole at nonpositive integer");
  }
  if (z.real() >= 0.5) return log_gamma_core(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  const ComplexScalar s = sin_pi(z, int_tol);
  return std::log(ComplexScalar(kPi, 0.0)) - std::log(s) -
         log_gamma_core(ComplexScalar(1.0, 0.0) - z);
}

ComplexScalar gamma(ComplexScalar z, double int_tol) {
  return std::exp(log_gamma(z, int_tol));
}

ComplexScalar reciprocal_gamma(ComplexScalar z, double int_tol) {
  if (is_nonpositive_integer(z, int_tol)) return ComplexScalar(0.0, 0.0);
  return std::exp(-log_gamma(z, int_tol));
}

ComplexScalar digamma(ComplexScalar z, double int_tol) {
  if (is_nonpositive_integer(z, int_tol)) {
    throw PoleAtNonpositiveInteger("digamma: pole at nonpositive integer");
  }
  if (z.real() < 0.5) {
    // psi(z) = psi(1 - z) - pi cot(pi z)
    return digamma(ComplexScalar(1.0, 0.0) - z, int_tol) -
           kPi * cos_pi(z) / sin_pi(z, int_tol);
  }
  // Push the argument up until the asymptotic series is accurate.
  ComplexScalar acc(0.0, 0.0);
  while (std::abs(z) < 12.0) {
    acc -= ComplexScalar(1.0, 0.0) / z;
    z += ComplexScalar(1.0, 0.0);
  }
  const ComplexScalar inv = ComplexScalar(1.0, 0.0) / z;
  const ComplexScalar inv2 = inv * inv;
  ComplexScalar series(0.0, 0.0);
  ComplexScalar p = inv2;
  for (double c : kDigammaAsym) {
    series += c * p;
    p *= inv2;
  }
  return acc + std::log(z) - 0.5 * inv - series;
}

double digamma_over_gamma_limit(long long n) {
  if (n < 0) {
    throw DomainError("digamma_over_gamma_limit: n must be >= 0");
  }
  // Near z = -n, Gamma(z) ~ (-1)^n / (n! (z + n)) and
  // psi(z) ~ -1 / (z + n), so the ratio tends to (-1)^{n+1} n!.
  double fact = 1.0;
  for (long long k = 2; k <= n; ++k) fact *= static_cast<double>(k);
  return (n % 2 == 0) ? -fact : fact;
}

ComplexScalar pochhammer(ComplexScalar a, long long k) {
  if (k < 0) throw DomainError("pochhammer: k must be >= 0");
  ComplexScalar p(1.0, 0.0);
  for (long long j = 0; j < k; ++j) {
    p *= a + ComplexScalar(static_cast<double>(j), 0.0);
  }
  return p;
}

ComplexScalar binomial_complex(ComplexScalar alpha, long long k) {
  if (k < 0) throw DomainError("binomial_complex: k must be >= 0");
  // C(alpha, k) = alpha (alpha-1) ... (alpha-k+1) / k!, interleaving the
  // divisions to keep intermediates tame.
  ComplexScalar p(1.0, 0.0);
  for (long long j = 0; j < k; ++j) {
    p *= (alpha - ComplexScalar(static_cast<double>(j), 0.0)) /
         ComplexScalar(static_cast<double>(j + 1), 0.0);
  }
  return p;
}

GammaProd& GammaProd::gamma(ComplexScalar z) {
  if (zero_) return *this;
  log_ += log_gamma(z);
  return *this;
}

GammaProd& GammaProd::rgamma(ComplexScalar z) {
  if (zero_) return *this;
  if (is_nonpositive_integer(z)) {
    zero_ = true;
    return *this;
  }
  log_ -= log_gamma(z);
  return *this;
}

GammaProd& GammaProd::power(ComplexScalar base, ComplexScalar expo) {
  if (zero_) return *this;
  if (base == ComplexScalar(0.0, 0.0)) {
    if (expo.real() > 0.0) {
      zero_ = true;
      return *this;
    }
    throw ZeroToNonpositivePower("GammaProd::power: 0 base, Re(expo) <= 0");
  }
  log_ += expo * std::log(base);
  return *this;
}

GammaProd& GammaProd::factor(ComplexScalar v) {
  if (zero_) return *this;
  if (v == ComplexScalar(0.0, 0.0)) {
    zero_ = true;
    return *this;
  }
  log_ += std::log(v);
  return *this;
}

GammaProd& GammaProd::divide(ComplexScalar v) {
  if (zero_) return *this;
  if (v == ComplexScalar(0.0, 0.0)) {
    throw DomainError("GammaProd::divide: division by zero");
  }
  log_ -= std::log(v);
  return *this;
}

ComplexScalar GammaProd::value() const {
  if (zero_) return ComplexScalar(0.0, 0.0);
  return std::exp(log_);
}

}  // namespace fpint
