#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stringy/config.hpp"
#include "stringy/hodge.hpp"
#include "stringy/rational.hpp"
#include "stringy/series.hpp"

namespace stringy {

// ---------------------------------------------------------------------------
// Stringy E-function
// ---------------------------------------------------------------------------

/// Open-strata formula:
///   E_st = sum_I H(D_I^o) prod_{i in I} (uv - 1) / ((uv)^{a_i+1} - 1)
/// with H(D_emptyset^o) = H(X) - H(D). A factor with a_i = 0 is the constant 1.
/// Throws ValidationError unless cfg passes lenient validation.
StringyRational stringy_e_open(const ResolutionConfig &cfg);

/// Closed-strata formula:
///   E_st = sum_I H(D_I) prod_{i in I} (uv - (uv)^{a_i+1}) / ((uv)^{a_i+1} - 1)
/// A factor with a_i = 0 is exactly zero, so such components drop out of
/// every nonempty I.
StringyRational stringy_e_closed(const ResolutionConfig &cfg);

struct StringyResult {
  StringyRational e_open;
  StringyRational e_closed;
  bool agree = false;
  TruncatedBiseries series;
  Exponent d = 0;

  /// The canonical value (from the closed formula).
  const StringyRational &value() const noexcept { return e_closed; }
};

/// Both formulas plus the expansion to `horizon` (default 2d). A false
/// `agree` signals a broken strata conversion, never a user error.
StringyResult compute(const ResolutionConfig &cfg, std::optional<Exponent> horizon = std::nullopt,
                      ValidationMode mode = ValidationMode::lenient);

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

/// A coefficient pair that breaks an identity: `lhs` at (i, j) should have
/// equalled `rhs`.
struct Witness {
  Exponent i = 0;
  Exponent j = 0;
  Integer lhs;
  Integer rhs;
};

struct CheckVerdict {
  bool pass = true;
  std::optional<Witness> witness;
};

/// Decides E(u, v) = (uv)^d E(1/u, 1/v) exactly. Writing x = N / prod(t^{m_k} - 1)
/// and D = d + sum m_k, the identity is N(u, v) = (-1)^K u^D v^D N(1/u, 1/v).
/// On failure the witness is the lowest (graded) (i, j) with
/// N_{i,j} != (-1)^K N_{D-i,D-j}; `lhs` is N_{i,j}, `rhs` the reflected value.
CheckVerdict check_duality(const StringyRational &x, Exponent d);

/// u <-> v symmetry of the numerator (the denominator is symmetric already).
CheckVerdict check_symmetry(const StringyRational &x);

struct PolynomialWitness {
  enum class Kind {
    /// A series coefficient with i > d or j > d is nonzero.
    exceeds_dimension,
    /// The candidate polynomial times the denominator misses the numerator.
    division_residual,
  };
  Kind kind = Kind::exceeds_dimension;
  Exponent i = 0;
  Exponent j = 0;
  Integer value;
};

struct PolynomialCheck {
  std::optional<BivariatePolynomial> polynomial;
  std::optional<PolynomialWitness> witness;

  bool is_polynomial() const noexcept { return polynomial.has_value(); }
};

/// Decides whether x is a polynomial with degree <= d in each variable.
PolynomialCheck is_polynomial(const StringyRational &x, Exponent d);

/// h^{p,q}_st = (-1)^{p+q} b_{p,q} for a polynomial E_st; also requires
/// h^{0,0}_st = 1.
DiamondResult stringy_hodge_numbers(const BivariatePolynomial &p, Exponent d);

/// The tentative generalisation for non-polynomial E_st: h^{i,j} =
/// (-1)^{i+j} b_{i,j} for i + j <= d, mirrored by h^{d-i,d-j} := h^{i,j}.
/// Entries are not checked for sign. Requires series.horizon() >= d.
HodgeDiamond generalized_hodge_numbers(const TruncatedBiseries &series, Exponent d);

struct SignEntry {
  Exponent i = 0;
  Exponent j = 0;
  Integer b;
};

struct NonnegativityReport {
  /// (i, j) with i + j <= d and (-1)^{i+j} b_{i,j} < 0.
  std::vector<SignEntry> violations;
  /// Same sign failures for d < i + j <= horizon, informational only.
  std::vector<SignEntry> beyond_range;

  bool pass() const noexcept { return violations.empty(); }
};

/// Throws std::invalid_argument if series.horizon() < d.
NonnegativityReport check_nonnegativity(const TruncatedBiseries &series, Exponent d);

// ---------------------------------------------------------------------------
// Coefficient decomposition
// ---------------------------------------------------------------------------

/// Series of (t - t^{a+1}) / (t^{a+1} - 1) in t = uv:
///   -t + t^{a+1} - t^{a+2} + t^{2a+2} - t^{2a+3} + ...
/// Zero for a = 0; throws std::invalid_argument for a < 0.
UnivariateTSeries correction_factor_series(std::int64_t a, Exponent horizon);

/// b_{i,j} split into the ambient coefficient c_{i,j}, the alternating sum
/// over closed strata, and the boundary term R_{i,j}. S_{i,j} is the matching
/// boundary dimension and implied_hodge_dim = (-1)^{i+j} b_{i,j} - S_{i,j}
/// is dim H^{d-i,d-j}(H^{2d-i-j}(Y)), conditional on the resolution being an
/// isomorphism over the smooth locus.
struct DecompositionRow {
  Exponent i = 0;
  Exponent j = 0;
  Integer direct;
  Integer c_term;
  Integer alternating_sum;
  Integer r_term;
  Integer s_term;
  Integer implied_hodge_dim;

  bool consistent() const { return direct == c_term + alternating_sum + r_term; }
  bool implied_nonnegative() const { return implied_hodge_dim >= 0; }
};

/// Requires strict validation (ValidationError) and i + j <= d for every
/// pair (std::domain_error). Pairs with i < j are answered via b_{i,j} = b_{j,i}.
std::vector<DecompositionRow> decompose_coefficients(const ResolutionConfig &cfg,
                                                     const std::vector<std::pair<Exponent, Exponent>> &pairs);

// ---------------------------------------------------------------------------
// Local contribution
// ---------------------------------------------------------------------------

struct LocalContribution {
  StringyRational value;
  /// Warnings, e.g. a singular locus that is not a finite set of points.
  ValidationReport notes;
};

/// E_st - H(Y \ Sing) with H(Y \ Sing) = H(X) - H(D): the additive share of
/// the singular locus. Throws std::invalid_argument without singular_locus.
LocalContribution local_contribution(const ResolutionConfig &cfg);

}  // namespace stringy
