// Compensated complex summation and a generic convergent-series driver.

#ifndef FPINT_SERIES_HPP
#define FPINT_SERIES_HPP

#include <cmath>
#include <functional>

#include "fpint/complex_ops.hpp"
#include "fpint/errors.hpp"

namespace fpint {

inline constexpr int kDefaultMaxTerms = 10000;
inline constexpr double kDefaultSeriesTol = 1e-15;

// Neumaier-compensated accumulator, applied per component.
class CompensatedSum {
 public:
  void add(ComplexScalar term) {
    add_part(term.real(), sr_, cr_);
    add_part(term.imag(), si_, ci_);
  }
  ComplexScalar value() const { return {sr_ + cr_, si_ + ci_}; }

 private:
  static void add_part(double v, double& s, double& c) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }
  double sr_ = 0.0, si_ = 0.0, cr_ = 0.0, ci_ = 0.0;
};

struct SeriesResult {
  ComplexScalar value{0.0, 0.0};
  int terms_used = 0;
  // magnitude of the last term, as a crude tail estimate
  double tail_estimate = 0.0;
  bool converged = false;
};

// Sums term(0) + term(1) + ... until the last three consecutive terms are
// all below tol * max(|sum|, tiny).  Throws NonConvergence when max_terms
// is exhausted first.
inline SeriesResult sum_series(const std::function<ComplexScalar(int)>& term,
                               double tol = kDefaultSeriesTol,
                               int max_terms = kDefaultMaxTerms) {
  CompensatedSum acc;
  int small_run = 0;
  double last = 0.0;
  for (int k = 0; k < max_terms; ++k) {
    const ComplexScalar t = term(k);
    acc.add(t);
    last = std::abs(t);
    const double scale = std::max(std::abs(acc.value()), 1e-300);
    if (last <= tol * scale) {
      if (++small_run >= 3) {
        return {acc.value(), k + 1, last, true};
      }
    } else {
      small_run = 0;
    }
  }
  throw NonConvergence("sum_series: term cap reached before tolerance");
}

}  // namespace fpint

#endif  // FPINT_SERIES_HPP
