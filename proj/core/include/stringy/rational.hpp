#pragma once

#include <span>
#include <vector>

#include "stringy/cyclo.hpp"
#include "stringy/polynomial.hpp"

namespace stringy {

/// An element of Z[[u,v]] ∩ Q(u,v) written as numerator / prod((uv)^m - 1).
///
/// Values are always in canonical form: no denominator factor divides the
/// numerator exactly. Factors (uv)^m - 1 for different m share roots, so two
/// canonical forms of the same function can still differ; operator== therefore
/// compares by cross-multiplication rather than structurally.
class StringyRational {
 public:
  StringyRational() = default;
  /// A polynomial value (empty denominator).
  StringyRational(BivariatePolynomial p);  // NOLINT(google-explicit-constructor)

  /// Builds numerator / denominator and cancels every factor that divides
  /// the numerator exactly, in increasing m.
  static StringyRational normalized(BivariatePolynomial numerator, CycloProduct denominator);

  const BivariatePolynomial &numerator() const noexcept { return num_; }
  const CycloProduct &denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool has_trivial_denominator() const noexcept { return den_.empty(); }

  /// Re-expresses the value over `target`, which must contain the current
  /// denominator as a sub-multiset. Returns the matching numerator.
  BivariatePolynomial numerator_over(const CycloProduct &target) const;

  StringyRational &operator+=(const StringyRational &rhs);
  StringyRational &operator-=(const StringyRational &rhs);
  StringyRational &operator*=(const StringyRational &rhs);

  friend StringyRational operator+(StringyRational a, const StringyRational &b) { return a += b; }
  friend StringyRational operator-(StringyRational a, const StringyRational &b) { return a -= b; }
  friend StringyRational operator*(StringyRational a, const StringyRational &b) { return a *= b; }
  friend StringyRational operator-(const StringyRational &a);

  /// Equality of the represented functions (cross-multiplication).
  friend bool operator==(const StringyRational &a, const StringyRational &b);
  /// Structural equality of the stored numerator and denominator.
  bool identical(const StringyRational &other) const noexcept {
    return num_ == other.num_ && den_ == other.den_;
  }

 private:
  StringyRational(BivariatePolynomial num, CycloProduct den, bool /*canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  BivariatePolynomial num_;
  CycloProduct den_;
};

StringyRational rational_normalize(BivariatePolynomial numerator, CycloProduct denominator);

/// True iff no denominator factor divides the numerator.
bool is_canonical(const BivariatePolynomial &numerator, const CycloProduct &denominator);

/// Accumulates many fractions over the union of their denominators and
/// normalizes once at the end. Cheaper than repeated operator+ for the long
/// subset sums of the stringy formulas.
class FractionSum {
 public:
  void add(BivariatePolynomial numerator, CycloProduct denominator);
  void add(const StringyRational &value) { add(value.numerator(), value.denominator()); }
  StringyRational result() const;

 private:
  std::vector<std::pair<BivariatePolynomial, CycloProduct>> terms_;
};

}  // namespace stringy
