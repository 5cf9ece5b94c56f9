#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <tuple>
#include <vector>

#include "stringy/integer.hpp"

namespace stringy {

/// Exponent pair of the monomial u^u v^v.
struct Monomial {
  Exponent u = 0;
  Exponent v = 0;

  constexpr Exponent total_degree() const noexcept { return u + v; }
  constexpr bool is_diagonal() const noexcept { return u == v; }
  constexpr Monomial swapped() const noexcept { return {v, u}; }

  auto operator<=>(const Monomial &) const = default;
};

/// Graded order: total degree ascending, then u descending. Used for display
/// and for picking the "lowest" term when reporting witnesses.
struct GradedLess {
  bool operator()(const Monomial &a, const Monomial &b) const noexcept {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.u > b.u;
  }
};

/// Sparse polynomial in Z[u, v]. Zero coefficients are never stored, so the
/// zero polynomial is the empty map.
class BivariatePolynomial {
 public:
  using Terms = std::map<Monomial, Integer>;

  BivariatePolynomial() = default;
  BivariatePolynomial(std::initializer_list<std::tuple<Exponent, Exponent, long long>> triples);

  static BivariatePolynomial constant(const Integer &c);
  static BivariatePolynomial monomial(Exponent i, Exponent j, const Integer &c = 1);
  /// c * (uv)^k
  static BivariatePolynomial t_power(Exponent k, const Integer &c = 1);
  /// sum_k coeffs[k] (uv)^k
  static BivariatePolynomial from_t_coefficients(const std::vector<Integer> &coeffs);

  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(Exponent i, Exponent j) const;
  Integer coefficient(const Monomial &m) const { return coefficient(m.u, m.v); }

  Exponent max_u() const noexcept;
  Exponent max_v() const noexcept;
  Exponent total_degree() const noexcept;

  /// True if every term is a power of t = uv.
  bool is_t_polynomial() const noexcept;
  /// True if the coefficient at (i, j) equals the one at (j, i) everywhere.
  bool is_symmetric() const;

  /// Terms sorted by GradedLess.
  std::vector<std::pair<Monomial, Integer>> graded_terms() const;

  BivariatePolynomial swapped() const;
  /// Multiplies by u^du v^dv.
  BivariatePolynomial shifted(Exponent du, Exponent dv) const;
  /// Drops every term of total degree > max_total.
  BivariatePolynomial truncated(Exponent max_total) const;

  /// Adds c * u^m.u v^m.v in place, pruning a resulting zero.
  void add_term(const Monomial &m, const Integer &c);

  BivariatePolynomial &operator+=(const BivariatePolynomial &rhs);
  BivariatePolynomial &operator-=(const BivariatePolynomial &rhs);
  BivariatePolynomial &operator*=(const BivariatePolynomial &rhs);
  BivariatePolynomial &operator*=(const Integer &c);

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial &b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial &b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial &a, const BivariatePolynomial &b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Integer &c) { return a *= c; }
  friend BivariatePolynomial operator-(BivariatePolynomial a);

  friend bool operator==(const BivariatePolynomial &, const BivariatePolynomial &) = default;

 private:
  Terms terms_;
};

/// a^n by repeated squaring.
BivariatePolynomial pow(const BivariatePolynomial &base, unsigned n);

}  // namespace stringy
