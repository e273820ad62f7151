#pragma once

// Identity-verification harness.
//
// The library evaluates each transformation equation in its catalog through
// two independent routes: a reference side (a plain hypergeometric series,
// direct quadrature of the defining integral, or a closed finite-part form)
// and a transformed side (the right-hand side of the equation, assembled
// from gamma-function prefactors, companion series, and restored singular
// contributions).  A verification report records both values and their
// residual; a sweep draws many parameter sets inside the equation's validity
// domain from a seeded sampler and aggregates residual statistics.
//
// Everything here is deterministic: a sweep with the same tag, seed, count,
// and tolerance produces bit-identical reports on every run.  Aggregation is
// an ordered fold over the sample index.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpint/complex_ops.hpp"
#include "fpint/rng.hpp"

namespace fpint {

// One tag per catalogued equation.  The short names follow the library's
// internal catalog order: Gauss-function transformations first, then the
// 3F2 family, then the Stieltjes-integral assemblies and the finite-part
// splittings verified against direct quadrature.
enum class IdentityTag {
  MainResult3,
  MainResult4x,
  MainResult1,
  RepCase4bx,
  RepCase4bShift,
  ResultX,
  RepCase4d,
  RepCase4c,
  Keykey,
  Xxx12,
  Iden3F2,
  General3F2,
  Res2,
  Res2x,
  Bebebe,
  Bebebex,
  MainLemma,
  Sese,
  Representation1a,
  May,
  Case4b,
  Case4c,
  Keyx,
  Fullint,
  Keyxxx,
};

inline constexpr std::array<IdentityTag, 25> kAllIdentityTags = {
    IdentityTag::MainResult3,      IdentityTag::MainResult4x,
    IdentityTag::MainResult1,      IdentityTag::RepCase4bx,
    IdentityTag::RepCase4bShift,   IdentityTag::ResultX,
    IdentityTag::RepCase4d,        IdentityTag::RepCase4c,
    IdentityTag::Keykey,           IdentityTag::Xxx12,
    IdentityTag::Iden3F2,          IdentityTag::General3F2,
    IdentityTag::Res2,             IdentityTag::Res2x,
    IdentityTag::Bebebe,           IdentityTag::Bebebex,
    IdentityTag::MainLemma,        IdentityTag::Sese,
    IdentityTag::Representation1a, IdentityTag::May,
    IdentityTag::Case4b,           IdentityTag::Case4c,
    IdentityTag::Keyx,             IdentityTag::Fullint,
    IdentityTag::Keyxxx,
};

// Canonical name of a tag ("MainResult3", "Keykey", ...).
std::string_view tag_name(IdentityTag tag);

// Inverse of tag_name, case-insensitive.  Returns nullopt for unknown names.
std::optional<IdentityTag> tag_from_name(std::string_view name);

// Ordered collection of named parameters.  Values are stored as complex
// scalars; integer-valued entries (series orders, lattice offsets) are
// stored exactly and read back with int_at.  Insertion order is preserved
// so that reports serialize deterministically.
class ParamRecord {
 public:
  ParamRecord() = default;

  void set(std::string_view name, ComplexScalar value);
  void set(std::string_view name, double value);
  void set(std::string_view name, long long value);

  bool has(std::string_view name) const;

  // Value lookup; throws DomainError when the name is missing.
  ComplexScalar at(std::string_view name) const;

  // Integer lookup; throws DomainError when the entry is missing or not
  // within integer-detection distance of a real integer.
  long long int_at(std::string_view name) const;

  const std::vector<std::pair<std::string, ComplexScalar>>& items() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, ComplexScalar>> entries_;
};

// Result of checking one equation at one parameter set.
struct VerificationReport {
  IdentityTag tag{};
  ParamRecord params;          // sampled parameters plus the argument z
  ComplexScalar lhs{0.0, 0.0};
  ComplexScalar rhs{0.0, 0.0};
  double abs_residual = 0.0;
  double rel_residual = 0.0;   // abs / max(|lhs|, |rhs|, 1e-300)
  bool pass = false;           // rel_residual <= tolerance
};

// Parameter names used by each tag (the argument z is passed separately and
// echoed into the report's record):
//
//   MainResult3        mu, nu, rho
//   MainResult4x       mu, nu, sigma
//   MainResult1        mu, nu, n
//   RepCase4bx         mu, rho, N          (nu = rho + N)
//   RepCase4bShift     mu, nu, n
//   ResultX            mu, nu, P           (rho = nu + P)
//   RepCase4d          mu, nu, m
//   RepCase4c          mu, rho
//   Keykey             nu, n
//   Xxx12              mu, nu, n
//   Iden3F2            beta, nu, sigma, n
//   General3F2         beta, nu, sigma, n
//   Res2, Res2x        beta, nu, n, m      (sigma = nu + m - n)
//   Bebebe, Bebebex    beta, nu, n, m      (sigma = nu - m - n)
//   MainLemma          a, mu, nu, rho      (b = a (1 - z))
//   Sese               a, mu, nu, rho      (b = a (1 - z))
//   Representation1a   a, mu, nu, n        (rho = n, b = a (1 - z))
//   May                a, mu, rho, N       (nu = rho + N, b = a (1 - z))
//   Case4b             a, mu, rho, N       (nu = rho + N, b = a (1 - z))
//   Case4c             a, mu, nu, P        (rho = nu + P, b = a (1 - z))
//   Keyx               beta, nu, sigma, n  (x = z, real in (0, 1))
//   Fullint            beta, nu, n, K      (sigma = nu + K - n)
//   Keyxxx             beta, nu, n, M      (sigma = nu - M - n)

// Default pass tolerance for a tag: 1e-9 for the Gauss-function
// transformations, 1e-8 for the 3F2 family and for every equation whose
// reference side is adaptive quadrature.
double default_tolerance(IdentityTag tag);

// One sampled parameter set together with the equation argument.
struct SampledPoint {
  ParamRecord params;
  ComplexScalar z{0.0, 0.0};
};

// Seeded parameter source.  Each draw lands strictly inside the tag's
// validity domain: small positive boxes (width at most 3) for the
// continuous parameters, deterministic cycling for series orders and
// lattice offsets, the argument z real in [0.45, 0.7], and rejection of
// any draw within 0.05 of an excluded integer line.  The draw sequence is
// a pure function of (seed, tag, index order), so sweeps are reproducible.
struct ParamSampler {
  std::uint64_t seed = 0;

  SampledPoint draw(IdentityTag tag, Rng& rng, int index) const;
};

// Evaluates both sides of the tagged equation at the given parameters and
// argument.  tol <= 0 selects default_tolerance(tag).  Throws DomainError
// when the parameters violate the equation's validity conditions (checked
// before any evaluation) and EvaluatorFailure naming the failing side when
// either evaluation route throws.
VerificationReport verify_identity(IdentityTag tag, const ParamRecord& params,
                                   ComplexScalar z, double tol = 0.0);

// One evaluation-route failure inside a sweep, kept instead of thrown.
struct SweepError {
  int index = 0;
  std::string message;
};

// Aggregate of a sweep: every per-sample report in index order, the indices
// of the samples whose residual exceeded the tolerance, and any per-sample
// evaluation errors.  Statistics are computed by an ordered fold over the
// reports (median of an even count averages the two central values).
struct SweepReport {
  IdentityTag tag{};
  double tolerance = 0.0;
  int count = 0;
  std::vector<VerificationReport> reports;
  std::vector<int> failing_indices;
  std::vector<SweepError> errors;
  double max_rel_residual = 0.0;
  double median_rel_residual = 0.0;

  bool all_passed() const {
    return failing_indices.empty() && errors.empty();
  }
};

// Draws `count` parameter sets for the tag from the sampler and verifies
// each.  Per-sample evaluation errors are recorded in the report, not
// thrown.  tol <= 0 selects default_tolerance(tag).
SweepReport sweep(IdentityTag tag, const ParamSampler& sampler, int count,
                  double tol = 0.0);

// Closed-form finite-part families checked against the definition-level
// extraction oracle.
enum class FpiFamily {
  Branch,   // branch-point strength: closed gamma form vs. oracle
  Pole,     // integer (pole) strength: logarithmic closed form vs. oracle
  Beta,     // beta-family finite part on (0, 1) vs. upper-endpoint oracle
  BetaLog,  // beta-family finite part with a log factor vs. the oracle
};

std::string_view family_name(FpiFamily family);

struct FpiOracleEntry {
  ParamRecord params;
  ComplexScalar closed{0.0, 0.0};
  ComplexScalar oracle{0.0, 0.0};
  double rel_residual = 0.0;
};

struct FpiOracleReport {
  FpiFamily family{};
  double tolerance = 0.0;
  std::vector<FpiOracleEntry> entries;
  double max_rel_residual = 0.0;
  bool pass = false;  // every entry within tolerance
};

// Compares the closed finite-part forms of one family against the
// epsilon-extraction oracle on a deterministic low-discrepancy grid of
// `grid_points` parameter sets.  tol <= 0 selects the family default:
// 1e-5 for Branch, Pole, and Beta, 1e-4 for BetaLog (the oracle loses
// accuracy on differentiated dictionaries).
FpiOracleReport verify_fpi_closed_vs_oracle(FpiFamily family,
                                            std::size_t grid_points = 20,
                                            double tol = 0.0);

}  // namespace fpint
