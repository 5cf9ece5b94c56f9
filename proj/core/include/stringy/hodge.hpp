#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stringy/polynomial.hpp"
#include "stringy/report.hpp"

namespace stringy {

/// Hodge–Deligne polynomial H(X; u, v) together with the dimension the caller
/// claims for X. The dimension is metadata only; nothing infers it.
struct HodgeDelignePolynomial {
  BivariatePolynomial poly;
  std::optional<Exponent> claimed_dimension;

  friend bool operator==(const HodgeDelignePolynomial &, const HodgeDelignePolynomial &) = default;
};

/// Square table h^{p,q}, 0 <= p, q <= d.
class HodgeDiamond {
 public:
  explicit HodgeDiamond(Exponent d) : d_(d), entries_((d + 1) * (d + 1)) {}

  Exponent dimension() const noexcept { return d_; }
  const Integer &at(Exponent p, Exponent q) const { return entries_.at(p * (d_ + 1) + q); }
  Integer &at(Exponent p, Exponent q) { return entries_.at(p * (d_ + 1) + q); }

  friend bool operator==(const HodgeDiamond &, const HodgeDiamond &) = default;

 private:
  Exponent d_;
  std::vector<Integer> entries_;
};

/// Why a polynomial does not yield a valid Hodge diamond.
struct DiamondViolation {
  enum class Kind { negative, asymmetric, not_normalized };
  Kind kind = Kind::negative;
  Exponent p = 0;
  Exponent q = 0;
  Integer value;
  std::string message;
};

using DiamondResult = std::variant<HodgeDiamond, DiamondViolation>;

/// 1 + uv + ... + (uv)^n
HodgeDelignePolynomial hd_projective_space(Exponent n);

/// H(X \ Y) = H(X) - H(Y)
HodgeDelignePolynomial hd_scissor(const HodgeDelignePolynomial &ambient, const HodgeDelignePolynomial &closed_subset);

/// H of the blowup of a smooth d-fold along a smooth centre of codimension c:
/// H(X) + H(Z) (uv + ... + (uv)^(c-1)). Throws std::invalid_argument for
/// c < 2 or when the centre claims a dimension other than d - c.
HodgeDelignePolynomial hd_blowup(Exponent ambient_dim, const HodgeDelignePolynomial &center, Exponent codim,
                                 const HodgeDelignePolynomial &ambient);

/// Checks u <-> v symmetry and Serre reflection (i, j) <-> (d - i, d - j).
/// Every violating exponent pair becomes one finding.
ValidationReport hd_validate_smooth_projective(const HodgeDelignePolynomial &h, Exponent d);

/// h^{p,q} = (-1)^{p+q} coeff(p, q). Requires every exponent <= d
/// (std::domain_error otherwise).
DiamondResult diamond_from_polynomial(const BivariatePolynomial &p, Exponent d);

}  // namespace stringy
