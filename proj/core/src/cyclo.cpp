#include "stringy/cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stringy {

CycloProduct::CycloProduct(std::vector<Exponent> factors) : factors_(std::move(factors)) {
  if (std::find(factors_.begin(), factors_.end(), Exponent{0}) != factors_.end())
    throw std::invalid_argument("cyclotomic factor exponent must be positive");
  std::sort(factors_.begin(), factors_.end());
}

Exponent CycloProduct::t_degree() const noexcept {
  return std::accumulate(factors_.begin(), factors_.end(), Exponent{0});
}

std::size_t CycloProduct::multiplicity(Exponent m) const noexcept {
  auto [lo, hi] = std::equal_range(factors_.begin(), factors_.end(), m);
  return static_cast<std::size_t>(hi - lo);
}

CycloProduct CycloProduct::united(const CycloProduct &other) const {
  CycloProduct r;
  std::set_union(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
                 std::back_inserter(r.factors_));
  return r;
}

CycloProduct CycloProduct::combined(const CycloProduct &other) const {
  CycloProduct r;
  std::merge(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
             std::back_inserter(r.factors_));
  return r;
}

std::optional<CycloProduct> CycloProduct::without(const CycloProduct &part) const {
  if (!std::includes(factors_.begin(), factors_.end(), part.factors_.begin(), part.factors_.end()))
    return std::nullopt;
  CycloProduct r;
  std::set_difference(factors_.begin(), factors_.end(), part.factors_.begin(), part.factors_.end(),
                      std::back_inserter(r.factors_));
  return r;
}

CycloProduct CycloProduct::erased_one(Exponent m) const {
  CycloProduct r = *this;
  auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), m);
  if (it != r.factors_.end() && *it == m) r.factors_.erase(it);
  return r;
}

BivariatePolynomial CycloProduct::expanded() const {
  BivariatePolynomial r = BivariatePolynomial::constant(1);
  for (Exponent m : factors_) r *= cyclo_factor(m);
  return r;
}

BivariatePolynomial cyclo_factor(Exponent m) {
  BivariatePolynomial f = BivariatePolynomial::t_power(m);
  f.add_term({0, 0}, -1);
  return f;
}

std::optional<BivariatePolynomial> cyclo_divide_exact(const BivariatePolynomial &n, Exponent m) {
  if (m == 0) throw std::invalid_argument("cyclo_divide_exact: m must be >= 1");

  // (uv)^m - 1 only involves t = uv, so n splits into independent strands
  // u^a t^k (or v^b t^k) and each strand is a univariate division in t.
  std::map<Monomial, std::map<Exponent, Integer>> strands;
  for (const auto &[mono, c] : n.terms()) {
    const Exponent k = std::min(mono.u, mono.v);
    strands[{mono.u - k, mono.v - k}].emplace(k, c);
  }

  BivariatePolynomial quotient;
  for (auto &[base, rem] : strands) {
    // Long division from the top: t^k = t^(k-m) (t^m - 1) + t^(k-m).
    while (!rem.empty()) {
      auto top = std::prev(rem.end());
      if (top->first < m) return std::nullopt;
      const Exponent k = top->first - m;
      const Integer c = top->second;
      rem.erase(top);
      quotient.add_term({base.u + k, base.v + k}, c);
      auto [it, inserted] = rem.try_emplace(k, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return quotient;
}

}  // namespace stringy
