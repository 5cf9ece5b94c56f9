#pragma once

#include <map>
#include <vector>

#include "stringy/polynomial.hpp"
#include "stringy/rational.hpp"

namespace stringy {

/// Power series in t = uv, exact for every power t^k with k <= horizon.
class UnivariateTSeries {
 public:
  explicit UnivariateTSeries(Exponent horizon) : coeffs_(horizon + 1) {}
  UnivariateTSeries(Exponent horizon, std::vector<Integer> coeffs);

  Exponent horizon() const noexcept { return coeffs_.size() - 1; }
  const Integer &operator[](Exponent k) const { return coeffs_.at(k); }
  Integer &operator[](Exponent k) { return coeffs_.at(k); }
  const std::vector<Integer> &coefficients() const noexcept { return coeffs_; }

  /// Product truncated to the smaller horizon.
  friend UnivariateTSeries operator*(const UnivariateTSeries &a, const UnivariateTSeries &b);
  /// Product with a polynomial in t (non-diagonal terms are rejected).
  UnivariateTSeries times(const BivariatePolynomial &t_poly) const;

  BivariatePolynomial as_polynomial() const { return BivariatePolynomial::from_t_coefficients(coeffs_); }

  friend bool operator==(const UnivariateTSeries &, const UnivariateTSeries &) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Expansion of 1 / ((uv)^m - 1) = -sum_k (uv)^(k m), up to t^horizon.
UnivariateTSeries series_of_inverse_cyclo(Exponent m, Exponent horizon);

/// Coefficients b_{i,j} of a bivariate power series for every i + j <= horizon.
class TruncatedBiseries {
 public:
  TruncatedBiseries() = default;
  explicit TruncatedBiseries(Exponent horizon) : horizon_(horizon) {}
  /// Truncation of p at total degree `horizon`.
  TruncatedBiseries(Exponent horizon, const BivariatePolynomial &p);

  Exponent horizon() const noexcept { return horizon_; }
  /// Throws std::out_of_range when i + j exceeds the horizon.
  Integer coefficient(Exponent i, Exponent j) const;
  Integer diagonal(Exponent k) const { return coefficient(k, k); }
  const BivariatePolynomial &terms() const noexcept { return coeffs_; }

  /// Product with a polynomial, truncated at the same horizon.
  TruncatedBiseries times(const BivariatePolynomial &p) const;

  friend bool operator==(const TruncatedBiseries &, const TruncatedBiseries &) = default;

 private:
  Exponent horizon_ = 0;
  BivariatePolynomial coeffs_;
};

/// Power-series expansion of x to total degree `horizon`.
TruncatedBiseries expand_rational(const StringyRational &x, Exponent horizon);

}  // namespace stringy
