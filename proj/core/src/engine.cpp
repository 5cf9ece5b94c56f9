#include "stringy/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stringy {

namespace {

std::vector<Exponent> factor_exponents(const ResolutionConfig &cfg, Subset s, bool &has_zero) {
  std::vector<Exponent> den;
  has_zero = false;
  for (std::size_t i = 0; i < cfg.components.size() && i < kMaxComponentsHard; ++i) {
    if (!(s & (Subset{1} << i))) continue;
    const auto a = cfg.components[i].discrepancy;
    if (a == 0) {
      has_zero = true;
    } else {
      den.push_back(static_cast<Exponent>(a) + 1);
    }
  }
  return den;
}

// t - t^{a+1}, the numerator of the closed-formula factor.
BivariatePolynomial closed_factor_numerator(Exponent m) {
  BivariatePolynomial p = BivariatePolynomial::t_power(1);
  p.add_term({m, m}, -1);
  return p;
}

Integer sign_of_degree(Exponent total, const Integer &b) { return total % 2 == 0 ? b : Integer(-b); }

}  // namespace

StringyRational stringy_e_open(const ResolutionConfig &cfg) {
  require_valid(cfg, ValidationMode::lenient);
  const ResolutionConfig open = convert_strata(cfg, StrataConvention::open);

  const BivariatePolynomial t_minus_one = cyclo_factor(1);
  std::vector<BivariatePolynomial> powers{BivariatePolynomial::constant(1)};

  FractionSum sum;
  BivariatePolynomial complement = cfg.ambient;  // H(X \ D)
  for (const auto &[s, poly] : open.strata) {
    complement -= poly;
    bool has_zero = false;
    auto den = factor_exponents(cfg, s, has_zero);
    // (uv - 1) / ((uv)^{a+1} - 1) for every a > 0; a = 0 contributes 1.
    const std::size_t k = den.size();
    while (powers.size() <= k) powers.push_back(powers.back() * t_minus_one);
    sum.add(poly * powers[k], CycloProduct(std::move(den)));
  }
  sum.add(complement, CycloProduct{});
  return sum.result();
}

StringyRational stringy_e_closed(const ResolutionConfig &cfg) {
  require_valid(cfg, ValidationMode::lenient);
  const ResolutionConfig closed = convert_strata(cfg, StrataConvention::closed);

  FractionSum sum;
  sum.add(cfg.ambient, CycloProduct{});
  for (const auto &[s, poly] : closed.strata) {
    bool has_zero = false;
    auto den = factor_exponents(cfg, s, has_zero);
    if (has_zero) continue;  // (uv - uv) / (uv - 1) = 0
    BivariatePolynomial num = poly;
    for (Exponent m : den) num *= closed_factor_numerator(m);
    sum.add(std::move(num), CycloProduct(std::move(den)));
  }
  return sum.result();
}

StringyResult compute(const ResolutionConfig &cfg, std::optional<Exponent> horizon, ValidationMode mode) {
  require_valid(cfg, mode);
  StringyResult r;
  r.d = cfg.dimension;
  r.e_open = stringy_e_open(cfg);
  r.e_closed = stringy_e_closed(cfg);
  r.agree = r.e_open == r.e_closed;
  r.series = expand_rational(r.e_closed, horizon.value_or(2 * cfg.dimension));
  return r;
}

CheckVerdict check_duality(const StringyRational &x, Exponent d) {
  const BivariatePolynomial &num = x.numerator();
  const Exponent top = d + x.denominator().t_degree();
  const bool flip = x.denominator().size() % 2 == 1;

  auto reflected = [&](const Monomial &m) -> Integer {
    if (m.u > top || m.v > top) return 0;
    const Integer c = num.coefficient(top - m.u, top - m.v);
    return flip ? Integer(-c) : c;
  };

  std::set<Monomial, GradedLess> candidates;
  for (const auto &[m, c] : num.terms()) {
    candidates.insert(m);
    if (m.u <= top && m.v <= top) candidates.insert({top - m.u, top - m.v});
  }
  for (const auto &m : candidates) {
    const Integer lhs = num.coefficient(m);
    const Integer rhs = reflected(m);
    if (lhs != rhs) return {false, Witness{m.u, m.v, lhs, rhs}};
  }
  return {};
}

CheckVerdict check_symmetry(const StringyRational &x) {
  const BivariatePolynomial &num = x.numerator();
  std::set<Monomial, GradedLess> candidates;
  for (const auto &[m, c] : num.terms()) {
    if (m.is_diagonal()) continue;
    candidates.insert(m);
    candidates.insert(m.swapped());
  }
  for (const auto &m : candidates) {
    const Integer lhs = num.coefficient(m);
    const Integer rhs = num.coefficient(m.swapped());
    if (lhs != rhs) return {false, Witness{m.u, m.v, lhs, rhs}};
  }
  return {};
}

PolynomialCheck is_polynomial(const StringyRational &x, Exponent d) {
  const Exponent horizon = 2 * d + x.denominator().t_degree();
  const TruncatedBiseries series = expand_rational(x, horizon);

  PolynomialCheck out;
  for (const auto &[m, c] : series.terms().graded_terms()) {
    if (m.u > d || m.v > d) {
      out.witness = PolynomialWitness{PolynomialWitness::Kind::exceeds_dimension, m.u, m.v, c};
      return out;
    }
  }
  // Everything with i, j <= d has i + j <= 2d <= horizon, so the candidate is exact.
  const BivariatePolynomial candidate = series.terms();
  const BivariatePolynomial residual = x.numerator() - candidate * x.denominator().expanded();
  if (!residual.is_zero()) {
    const auto [m, c] = residual.graded_terms().front();
    out.witness = PolynomialWitness{PolynomialWitness::Kind::division_residual, m.u, m.v, c};
    return out;
  }
  out.polynomial = candidate;
  return out;
}

DiamondResult stringy_hodge_numbers(const BivariatePolynomial &p, Exponent d) {
  DiamondResult r = diamond_from_polynomial(p, d);
  if (auto *diamond = std::get_if<HodgeDiamond>(&r); diamond && diamond->at(0, 0) != 1) {
    return DiamondViolation{DiamondViolation::Kind::not_normalized, 0, 0, diamond->at(0, 0),
                            "h^{0,0}_st = " + diamond->at(0, 0).str() + " but must be 1"};
  }
  return r;
}

HodgeDiamond generalized_hodge_numbers(const TruncatedBiseries &series, Exponent d) {
  if (series.horizon() < d) throw std::invalid_argument("generalized_hodge_numbers: horizon below dimension");
  HodgeDiamond h(d);
  for (Exponent i = 0; i <= d; ++i) {
    for (Exponent j = 0; i + j <= d; ++j) {
      const Integer value = sign_of_degree(i + j, series.coefficient(i, j));
      h.at(i, j) = value;
      h.at(d - i, d - j) = value;
    }
  }
  return h;
}

NonnegativityReport check_nonnegativity(const TruncatedBiseries &series, Exponent d) {
  if (series.horizon() < d) throw std::invalid_argument("check_nonnegativity: series horizon is below the dimension");
  NonnegativityReport report;
  for (const auto &[m, c] : series.terms().graded_terms()) {
    if (sign_of_degree(m.total_degree(), c) >= 0) continue;
    (m.total_degree() <= d ? report.violations : report.beyond_range).push_back({m.u, m.v, c});
  }
  return report;
}

UnivariateTSeries correction_factor_series(std::int64_t a, Exponent horizon) {
  if (a < 0) throw std::invalid_argument("correction_factor_series: discrepancy must be >= 0");
  UnivariateTSeries s(horizon);
  if (a == 0) return s;
  const auto period = static_cast<Exponent>(a) + 1;
  if (horizon >= 1) s[1] = -1;
  for (Exponent p = period; p <= horizon; p += period) {
    s[p] += 1;
    if (p + 1 <= horizon) s[p + 1] -= 1;
  }
  return s;
}

LocalContribution local_contribution(const ResolutionConfig &cfg) {
  if (!cfg.singular_locus) throw std::invalid_argument("local_contribution: singular_locus is required");
  LocalContribution out;
  const StringyRational e = stringy_e_closed(cfg);
  const BivariatePolynomial smooth_part = cfg.ambient - exceptional_total_hd(cfg);  // H(Y \ Sing)
  out.value = e - StringyRational(smooth_part);

  const auto &sing = *cfg.singular_locus;
  if (!(sing.is_zero() || (sing.size() == 1 && sing.terms().begin()->first == Monomial{0, 0}))) {
    out.notes.warning("local.non_isolated",
                      "singular locus is not a finite set of points; the local share is only meaningful "
                      "for isolated singularities",
                      "singular_locus");
  }
  return out;
}

}  // namespace stringy
