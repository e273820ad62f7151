#include "fpint/fpi_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

namespace fpint {

namespace {

// One dictionary entry: eps^exponent * (ln eps)^log_power.  The constant
// term is the entry {0, 0}.
struct Basis {
  ComplexScalar exponent{0.0, 0.0};
  int log_power = 0;
  bool divergent = false;
};

ComplexScalar eval_basis(const Basis& b, double eps) {
  const double le = std::log(eps);
  ComplexScalar v = (b.exponent == ComplexScalar(0.0, 0.0))
                        ? ComplexScalar(1.0, 0.0)
                        : std::exp(b.exponent * le);
  for (int p = 0; p < b.log_power; ++p) v *= le;
  return v;
}

bool exponent_is_divergent(ComplexScalar q, int log_power) {
  if (q.real() < -1e-12) return true;
  if (std::abs(q.real()) <= 1e-12) {
    // purely oscillating eps^(i y) has no limit either; and any positive
    // log power on a ~constant exponent diverges
    if (std::abs(q.imag()) > 1e-12) return true;
    return log_power > 0;
  }
  return false;
}

// The exponents the cut expansion can produce.  For f = x^(-lambda) g(x),
// term p of g contributes eps^(p+1-lambda); an integer lambda = n+1 turns
// the p = n contribution into ln eps.  A ln x factor on the integrand
// raises every entry's log power by one.
std::vector<Basis> build_dictionary(ComplexScalar lambda, bool log_factor) {
  std::vector<Basis> dict;
  auto push = [&](ComplexScalar q, int lp) {
    dict.push_back({q, lp, exponent_is_divergent(q, lp)});
  };
  dict.push_back({{0.0, 0.0}, 0, false});  // the finite part
  const auto n_int = detect_integer(lambda);
  if (n_int.has_value()) {
    const long long n = *n_int - 1;  // lambda = n + 1
    for (long long p = 0; p <= n + 3; ++p) {
      const ComplexScalar q(static_cast<double>(p - n), 0.0);
      if (p == n) {
        push(q, 1);
        if (log_factor) push(q, 2);
      } else {
        push(q, 0);  // {0,0} never reached here since p != n
        if (log_factor) push(q, 1);
      }
    }
  } else {
    for (long long p = 0;; ++p) {
      const ComplexScalar q =
          ComplexScalar(static_cast<double>(p) + 1.0, 0.0) - lambda;
      if (q.real() > 2.6 || p > 24) break;
      push(q, 0);
      if (log_factor) push(q, 1);
    }
  }
  return dict;
}

// Analytic coefficient of each divergent dictionary entry coming from
// Taylor term g_p, when the caller supplied g_p.  Returns pairs of
// (dictionary index, coefficient).
std::vector<std::pair<std::size_t, ComplexScalar>> pin_divergent(
    const std::vector<Basis>& dict, ComplexScalar lambda, bool log_factor,
    const std::vector<ComplexScalar>& g) {
  std::vector<std::pair<std::size_t, ComplexScalar>> pins;
  if (g.empty()) return pins;
  auto find = [&](ComplexScalar q, int lp) -> std::size_t {
    for (std::size_t i = 0; i < dict.size(); ++i) {
      if (dict[i].log_power == lp &&
          std::abs(dict[i].exponent - q) < 1e-10) {
        return i;
      }
    }
    return dict.size();
  };
  auto add = [&](ComplexScalar q, int lp, ComplexScalar c) {
    const std::size_t i = find(q, lp);
    if (i < dict.size() && dict[i].divergent) pins.emplace_back(i, c);
  };
  const auto n_int = detect_integer(lambda);
  for (std::size_t p = 0; p < g.size(); ++p) {
    if (n_int.has_value()) {
      const long long n = *n_int - 1;
      const long long pp = static_cast<long long>(p);
      if (pp == n) {
        // integral of x^(-1): -g_n ln eps; with a ln x factor,
        // -g_n ln^2(eps)/2
        if (log_factor) {
          add({0.0, 0.0}, 2, -0.5 * g[p]);
        } else {
          add({0.0, 0.0}, 1, -g[p]);
        }
        continue;
      }
      const ComplexScalar q(static_cast<double>(pp - n), 0.0);
      if (log_factor) {
        add(q, 1, -g[p] / q);
        add(q, 0, g[p] / (q * q));
      } else {
        add(q, 0, -g[p] / q);
      }
    } else {
      const ComplexScalar q =
          ComplexScalar(static_cast<double>(p) + 1.0, 0.0) - lambda;
      if (log_factor) {
        add(q, 1, -g[p] / q);
        add(q, 0, g[p] / (q * q));
      } else {
        add(q, 0, -g[p] / q);
      }
    }
  }
  return pins;
}

// Dense complex least squares by Householder QR with column equilibration.
// Returns the solution and fills sens_const with
// || R^{-H} e_const || / scale_const, the factor that maps weighted
// residual noise into the constant coefficient.
std::vector<ComplexScalar> solve_ls(std::vector<std::vector<ComplexScalar>> A,
                                    std::vector<ComplexScalar> b,
                                    std::size_t const_col,
                                    double* rms_residual,
                                    double* sens_const) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  if (m < n + 2) {
    throw FitIllConditioned(
        "finite-part fit: not enough levels for the dictionary size");
  }
  std::vector<double> scale(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s = std::max(s, std::abs(A[i][j]));
    if (s == 0.0) s = 1.0;
    scale[j] = s;
    for (std::size_t i = 0; i < m; ++i) A[i][j] /= s;
  }
  // Householder QR, applied in place to A and b.
  for (std::size_t k = 0; k < n; ++k) {
    double normx = 0.0;
    for (std::size_t i = k; i < m; ++i) normx += std::norm(A[i][k]);
    normx = std::sqrt(normx);
    if (normx < 1e-13) {
      throw FitIllConditioned(
          "finite-part fit: dictionary column is numerically degenerate");
    }
    const ComplexScalar x0 = A[k][k];
    const ComplexScalar phase =
        (x0 == ComplexScalar(0.0, 0.0)) ? ComplexScalar(1.0, 0.0)
                                        : x0 / std::abs(x0);
    const ComplexScalar alpha = -phase * normx;
    std::vector<ComplexScalar> v(m - k);
    v[0] = x0 - alpha;
    for (std::size_t i = k + 1; i < m; ++i) v[i - k] = A[i][k];
    double vnorm2 = 0.0;
    for (const auto& vi : v) vnorm2 += std::norm(vi);
    if (vnorm2 > 0.0) {
      for (std::size_t j = k; j < n; ++j) {
        ComplexScalar dot(0.0, 0.0);
        for (std::size_t i = k; i < m; ++i) dot += std::conj(v[i - k]) * A[i][j];
        dot *= 2.0 / vnorm2;
        for (std::size_t i = k; i < m; ++i) A[i][j] -= dot * v[i - k];
      }
      ComplexScalar dot(0.0, 0.0);
      for (std::size_t i = k; i < m; ++i) dot += std::conj(v[i - k]) * b[i];
      dot *= 2.0 / vnorm2;
      for (std::size_t i = k; i < m; ++i) b[i] -= dot * v[i - k];
    }
    A[k][k] = alpha;
    for (std::size_t i = k + 1; i < m; ++i) A[i][k] = {0.0, 0.0};
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(A[k][k]) < 1e-10) {
      throw FitIllConditioned(
          "finite-part fit: dictionary is rank-deficient at this grid");
    }
  }
  // back substitution
  std::vector<ComplexScalar> c(n);
  for (std::size_t kk = n; kk-- > 0;) {
    ComplexScalar s = b[kk];
    for (std::size_t j = kk + 1; j < n; ++j) s -= A[kk][j] * c[j];
    c[kk] = s / A[kk][kk];
  }
  if (rms_residual) {
    double r2 = 0.0;
    for (std::size_t i = n; i < m; ++i) r2 += std::norm(b[i]);
    *rms_residual = std::sqrt(r2 / static_cast<double>(m - n));
  }
  if (sens_const) {
    // forward-substitute R^H y = e_const
    std::vector<ComplexScalar> y(n, ComplexScalar(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      ComplexScalar s =
          (i == const_col) ? ComplexScalar(1.0, 0.0) : ComplexScalar(0.0, 0.0);
      for (std::size_t j = 0; j < i; ++j) s -= std::conj(A[j][i]) * y[j];
      y[i] = s / std::conj(A[i][i]);
    }
    double yn = 0.0;
    for (const auto& yi : y) yn += std::norm(yi);
    *sens_const = std::sqrt(yn) / scale[const_col];
  }
  for (std::size_t j = 0; j < n; ++j) c[j] /= scale[j];
  return c;
}

// Integrand wrapper used internally: called with the abscissa and the
// distance to the (finite) upper endpoint, so that mirrored problems can
// evaluate their singular factor without cancellation.
using Evaluator = std::function<ComplexScalar(double x, double dist_upper)>;

OracleResult extract_core(const Evaluator& eval, ComplexScalar lambda,
                          bool log_factor, double upper,
                          const std::vector<ComplexScalar>& taylor,
                          double eps0, int levels) {
  if (!(lambda.real() > 0.0)) {
    throw DomainError("extract_finite_part: Re(lambda) must be positive");
  }
  levels = std::clamp(levels, 8, 24);
  const bool infinite = std::isinf(upper);
  if (!infinite) {
    if (!(upper > 0.0)) {
      throw DomainError("extract_finite_part: upper limit must be positive");
    }
    eps0 = std::min(eps0, 0.25 * upper);
  }
  if (!(eps0 > 0.0)) {
    throw DomainError("extract_finite_part: eps0 must be positive");
  }

  // Cut integrals on the geometric grid, assembled incrementally so the
  // tail integral (and its error) is shared by every level: a shared
  // offset is absorbed entirely by the constant term of the fit.
  std::vector<double> eps(levels);
  for (int j = 0; j < levels; ++j) eps[j] = eps0 * std::ldexp(1.0, -j);
  std::vector<ComplexScalar> I(levels);
  double quad_err = 0.0;
  if (infinite) {
    const auto tail = tanh_sinh_semi_infinite(
        [&](double x, double) {
          return eval(x, std::numeric_limits<double>::infinity());
        },
        eps0);
    I[0] = tail.value;
    quad_err += tail.error_estimate;
  } else {
    const double d = upper;
    const auto tail = tanh_sinh_distances(
        [&](double fa, double fb) { return eval(eps0 + fa, fb); }, eps0, d);
    I[0] = tail.value;
    quad_err += tail.error_estimate;
  }
  for (int j = 1; j < levels; ++j) {
    const double a = eps[j];
    const double b = eps[j - 1];
    const auto piece = tanh_sinh_distances(
        [&](double fa, double fb) {
          (void)fb;
          const double x = a + fa;
          return eval(x, infinite ? std::numeric_limits<double>::infinity()
                                  : upper - x);
        },
        a, b);
    I[j] = I[j - 1] + piece.value;
    quad_err += piece.error_estimate;
  }

  const std::vector<Basis> dict = build_dictionary(lambda, log_factor);
  const auto pins = pin_divergent(dict, lambda, log_factor, taylor);

  // Subtract pinned divergent content, then fit the remaining columns.
  std::vector<bool> pinned(dict.size(), false);
  for (const auto& [idx, coeff] : pins) pinned[idx] = true;
  std::vector<ComplexScalar> rhs = I;
  for (const auto& [idx, coeff] : pins) {
    for (int j = 0; j < levels; ++j) {
      rhs[j] -= coeff * eval_basis(dict[idx], eps[j]);
    }
  }
  std::vector<std::size_t> cols;
  std::size_t const_col = 0;
  for (std::size_t i = 0; i < dict.size(); ++i) {
    if (pinned[i]) continue;
    if (dict[i].exponent == ComplexScalar(0.0, 0.0) &&
        dict[i].log_power == 0) {
      const_col = cols.size();
    }
    cols.push_back(i);
  }
  // Rows weighted by the size of the data they carry: quadrature error is
  // relative, so levels dominated by huge divergent terms should not be
  // trusted to absolute precision.
  std::vector<std::vector<ComplexScalar>> A(
      levels, std::vector<ComplexScalar>(cols.size()));
  std::vector<ComplexScalar> wb(levels);
  for (int j = 0; j < levels; ++j) {
    const double w = 1.0 / std::max(1.0, std::abs(I[j]));
    for (std::size_t i = 0; i < cols.size(); ++i) {
      A[j][i] = w * eval_basis(dict[cols[i]], eps[j]);
    }
    wb[j] = w * rhs[j];
  }
  double rms = 0.0, sens = 0.0;
  const auto coef = solve_ls(std::move(A), std::move(wb), const_col, &rms,
                             &sens);

  OracleResult out;
  out.finite_part = coef[const_col];
  out.error_estimate = rms * sens + quad_err;
  for (const auto& [idx, c] : pins) {
    out.dropped_terms.push_back({dict[idx].exponent, dict[idx].log_power, c});
  }
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (dict[cols[i]].divergent) {
      out.dropped_terms.push_back(
          {dict[cols[i]].exponent, dict[cols[i]].log_power, coef[i]});
    }
  }
  std::sort(out.dropped_terms.begin(), out.dropped_terms.end(),
            [](const DroppedTerm& a, const DroppedTerm& b) {
              if (a.exponent.real() != b.exponent.real()) {
                return a.exponent.real() < b.exponent.real();
              }
              return a.log_power > b.log_power;
            });
  return out;
}

}  // namespace

OracleResult extract_finite_part(const OracleProblem& problem, double eps0,
                                 int levels) {
  if (!problem.integrand) {
    throw DomainError("extract_finite_part: missing integrand");
  }
  const auto& f = problem.integrand;
  return extract_core([&f](double x, double) { return f(x); }, problem.lambda,
                      problem.log_factor, problem.upper_limit,
                      problem.taylor_coeffs, eps0, levels);
}

OracleResult extract_finite_part_upper(const OracleProblem& problem,
                                       double eps0, int levels) {
  if (!problem.integrand) {
    throw DomainError("extract_finite_part_upper: missing integrand");
  }
  if (std::isinf(problem.upper_limit)) {
    throw DomainError(
        "extract_finite_part_upper: the singular endpoint must be finite");
  }
  // Mirror through x -> upper - x; the evaluator receives the distance to
  // the mirrored upper endpoint, which is exactly the original abscissa.
  const auto& f = problem.integrand;
  return extract_core(
      [&f](double, double dist_upper) { return f(dist_upper); },
      problem.lambda, problem.log_factor, problem.upper_limit,
      problem.taylor_coeffs, eps0, levels);
}

}  // namespace fpint
