#include "stringy/polynomial.hpp"

#include <algorithm>

namespace stringy {

BivariatePolynomial::BivariatePolynomial(
    std::initializer_list<std::tuple<Exponent, Exponent, long long>> triples) {
  for (const auto &[i, j, c] : triples) add_term({i, j}, Integer(c));
}

BivariatePolynomial BivariatePolynomial::constant(const Integer &c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(Exponent i, Exponent j, const Integer &c) {
  BivariatePolynomial p;
  p.add_term({i, j}, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::t_power(Exponent k, const Integer &c) { return monomial(k, k, c); }

BivariatePolynomial BivariatePolynomial::from_t_coefficients(const std::vector<Integer> &coeffs) {
  BivariatePolynomial p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term({k, k}, coeffs[k]);
  return p;
}

Integer BivariatePolynomial::coefficient(Exponent i, Exponent j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

Exponent BivariatePolynomial::max_u() const noexcept {
  Exponent r = 0;
  for (const auto &[m, c] : terms_) r = std::max(r, m.u);
  return r;
}

Exponent BivariatePolynomial::max_v() const noexcept {
  Exponent r = 0;
  for (const auto &[m, c] : terms_) r = std::max(r, m.v);
  return r;
}

Exponent BivariatePolynomial::total_degree() const noexcept {
  Exponent r = 0;
  for (const auto &[m, c] : terms_) r = std::max(r, m.total_degree());
  return r;
}

bool BivariatePolynomial::is_t_polynomial() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.first.is_diagonal(); });
}

bool BivariatePolynomial::is_symmetric() const {
  for (const auto &[m, c] : terms_) {
    if (m.is_diagonal()) continue;
    if (coefficient(m.swapped()) != c) return false;
  }
  return true;
}

std::vector<std::pair<Monomial, Integer>> BivariatePolynomial::graded_terms() const {
  std::vector<std::pair<Monomial, Integer>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return GradedLess{}(a.first, b.first); });
  return out;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial r;
  for (const auto &[m, c] : terms_) r.terms_.emplace(m.swapped(), c);
  return r;
}

BivariatePolynomial BivariatePolynomial::shifted(Exponent du, Exponent dv) const {
  BivariatePolynomial r;
  for (const auto &[m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Monomial{m.u + du, m.v + dv}, c);
  return r;
}

BivariatePolynomial BivariatePolynomial::truncated(Exponent max_total) const {
  BivariatePolynomial r;
  for (const auto &[m, c] : terms_)
    if (m.total_degree() <= max_total) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

void BivariatePolynomial::add_term(const Monomial &m, const Integer &c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivariatePolynomial &BivariatePolynomial::operator+=(const BivariatePolynomial &rhs) {
  for (const auto &[m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BivariatePolynomial &BivariatePolynomial::operator-=(const BivariatePolynomial &rhs) {
  for (const auto &[m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BivariatePolynomial &BivariatePolynomial::operator*=(const BivariatePolynomial &rhs) {
  *this = *this * rhs;
  return *this;
}

BivariatePolynomial &BivariatePolynomial::operator*=(const Integer &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, coeff] : terms_) coeff *= c;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial &a, const BivariatePolynomial &b) {
  BivariatePolynomial r;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) r.add_term({ma.u + mb.u, ma.v + mb.v}, ca * cb);
  return r;
}

BivariatePolynomial operator-(BivariatePolynomial a) {
  for (auto &[m, c] : a.terms_) c = -c;
  return a;
}

BivariatePolynomial pow(const BivariatePolynomial &base, unsigned n) {
  BivariatePolynomial result = BivariatePolynomial::constant(1);
  BivariatePolynomial b = base;
  while (n != 0) {
    if (n & 1U) result *= b;
    n >>= 1U;
    if (n != 0) b *= b;
  }
  return result;
}

}  // namespace stringy
