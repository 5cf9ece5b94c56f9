#include "stringy/rational.hpp"

#include <map>
#include <stdexcept>

namespace stringy {

StringyRational::StringyRational(BivariatePolynomial p) : num_(std::move(p)) {}

StringyRational StringyRational::normalized(BivariatePolynomial numerator, CycloProduct denominator) {
  if (numerator.is_zero()) return StringyRational();
  // One ascending pass suffices: if (t^m - 1) does not divide N it cannot
  // divide any exact quotient of N either.
  std::vector<Exponent> kept;
  for (Exponent m : denominator.factors()) {
    if (auto q = cyclo_divide_exact(numerator, m)) {
      numerator = std::move(*q);
    } else {
      kept.push_back(m);
    }
  }
  return StringyRational(std::move(numerator), CycloProduct(std::move(kept)), true);
}

BivariatePolynomial StringyRational::numerator_over(const CycloProduct &target) const {
  auto cofactor = target.without(den_);
  if (!cofactor) throw std::invalid_argument("numerator_over: target does not contain the denominator");
  return num_ * cofactor->expanded();
}

StringyRational &StringyRational::operator+=(const StringyRational &rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  CycloProduct common = den_.united(rhs.den_);
  BivariatePolynomial sum = numerator_over(common) + rhs.numerator_over(common);
  *this = normalized(std::move(sum), std::move(common));
  return *this;
}

StringyRational &StringyRational::operator-=(const StringyRational &rhs) { return *this += -rhs; }

StringyRational &StringyRational::operator*=(const StringyRational &rhs) {
  *this = normalized(num_ * rhs.num_, den_.combined(rhs.den_));
  return *this;
}

StringyRational operator-(const StringyRational &a) { return StringyRational(-a.num_, a.den_, true); }

bool operator==(const StringyRational &a, const StringyRational &b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_.expanded() == b.num_ * a.den_.expanded();
}

StringyRational rational_normalize(BivariatePolynomial numerator, CycloProduct denominator) {
  return StringyRational::normalized(std::move(numerator), std::move(denominator));
}

bool is_canonical(const BivariatePolynomial &numerator, const CycloProduct &denominator) {
  for (Exponent m : denominator.factors())
    if (cyclo_divide_exact(numerator, m)) return false;
  return true;
}

void FractionSum::add(BivariatePolynomial numerator, CycloProduct denominator) {
  if (numerator.is_zero()) return;
  terms_.emplace_back(std::move(numerator), std::move(denominator));
}

StringyRational FractionSum::result() const {
  CycloProduct common;
  for (const auto &[n, d] : terms_) common = common.united(d);
  std::map<std::vector<Exponent>, BivariatePolynomial> cofactors;
  BivariatePolynomial total;
  for (const auto &[n, d] : terms_) {
    std::vector<Exponent> key(d.factors().begin(), d.factors().end());
    auto it = cofactors.find(key);
    if (it == cofactors.end()) it = cofactors.emplace(std::move(key), common.without(d)->expanded()).first;
    total += n * it->second;
  }
  return StringyRational::normalized(std::move(total), std::move(common));
}

}  // namespace stringy
