#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stringy/polynomial.hpp"

namespace stringy {

/// Multiset of positive integers m, each standing for the factor (uv)^m - 1.
/// The empty multiset is the constant 1. Entries are kept sorted ascending.
class CycloProduct {
 public:
  CycloProduct() = default;
  /// Throws std::invalid_argument on a zero entry.
  explicit CycloProduct(std::vector<Exponent> factors);

  std::span<const Exponent> factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  std::size_t size() const noexcept { return factors_.size(); }
  /// Degree in t = uv, i.e. the sum of all m.
  Exponent t_degree() const noexcept;
  std::size_t multiplicity(Exponent m) const noexcept;

  /// Multiset union (maximum multiplicity of each m).
  CycloProduct united(const CycloProduct &other) const;
  /// Multiset sum (multiplicities add).
  CycloProduct combined(const CycloProduct &other) const;
  /// this minus `part`; nullopt unless `part` is a sub-multiset.
  std::optional<CycloProduct> without(const CycloProduct &part) const;
  /// Removes one occurrence of m; no-op if absent.
  CycloProduct erased_one(Exponent m) const;

  /// prod ((uv)^m - 1) as a polynomial.
  BivariatePolynomial expanded() const;

  friend bool operator==(const CycloProduct &, const CycloProduct &) = default;

 private:
  std::vector<Exponent> factors_;
};

/// (uv)^m - 1
BivariatePolynomial cyclo_factor(Exponent m);

/// Exact quotient of n by (uv)^m - 1, or nullopt when the division leaves a
/// remainder. Requires m >= 1 (std::invalid_argument otherwise).
std::optional<BivariatePolynomial> cyclo_divide_exact(const BivariatePolynomial &n, Exponent m);

}  // namespace stringy
