#include "stringy/hodge.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace stringy {

namespace {

std::string pair_text(Exponent i, Exponent j) {
  std::ostringstream os;
  os << '(' << i << ',' << j << ')';
  return os.str();
}

}  // namespace

HodgeDelignePolynomial hd_projective_space(Exponent n) {
  HodgeDelignePolynomial h;
  for (Exponent k = 0; k <= n; ++k) h.poly.add_term({k, k}, 1);
  h.claimed_dimension = n;
  return h;
}

HodgeDelignePolynomial hd_scissor(const HodgeDelignePolynomial &ambient, const HodgeDelignePolynomial &closed_subset) {
  return {ambient.poly - closed_subset.poly, ambient.claimed_dimension};
}

HodgeDelignePolynomial hd_blowup(Exponent ambient_dim, const HodgeDelignePolynomial &center, Exponent codim,
                                 const HodgeDelignePolynomial &ambient) {
  if (codim < 2) throw std::invalid_argument("hd_blowup: codimension must be at least 2");
  if (codim > ambient_dim) throw std::invalid_argument("hd_blowup: codimension exceeds ambient dimension");
  if (center.claimed_dimension && *center.claimed_dimension != ambient_dim - codim)
    throw std::invalid_argument("hd_blowup: centre dimension does not match ambient_dim - codim");

  BivariatePolynomial fibre_excess;  // H(P^{c-1}) - 1
  for (Exponent k = 1; k < codim; ++k) fibre_excess.add_term({k, k}, 1);
  return {ambient.poly + center.poly * fibre_excess, ambient_dim};
}

ValidationReport hd_validate_smooth_projective(const HodgeDelignePolynomial &h, Exponent d) {
  ValidationReport report;
  const auto &p = h.poly;

  for (const auto &[m, c] : p.terms()) {
    if (m.u > m.v) {
      const Integer mirror = p.coefficient(m.swapped());
      if (mirror != c) {
        report.error("hd.symmetry",
                     "coefficient " + c.str() + " at " + pair_text(m.u, m.v) + " differs from " + mirror.str() +
                         " at " + pair_text(m.v, m.u),
                     pair_text(m.u, m.v));
      }
    } else if (m.u < m.v && p.coefficient(m.swapped()) == 0) {
      report.error("hd.symmetry",
                   "coefficient " + c.str() + " at " + pair_text(m.u, m.v) + " differs from 0 at " +
                       pair_text(m.v, m.u),
                   pair_text(m.v, m.u));
    }
  }

  // Serre reflection, reported once per unordered pair {m, reflect(m)}.
  std::set<Monomial> seen;
  auto check = [&](const Monomial &m) {
    if (m.u > d || m.v > d) {
      report.error("hd.serre",
                   "coefficient at " + pair_text(m.u, m.v) + " lies outside the " + std::to_string(d) +
                       "-dimensional range",
                   pair_text(m.u, m.v));
      return;
    }
    const Monomial r{d - m.u, d - m.v};
    const Monomial lo = std::min(m, r);
    if (!seen.insert(lo).second) return;
    const Integer a = p.coefficient(lo);
    const Monomial hi = std::max(m, r);
    const Integer b = p.coefficient(hi);
    if (a != b) {
      report.error("hd.serre",
                   "coefficient " + a.str() + " at " + pair_text(lo.u, lo.v) + " differs from " + b.str() + " at " +
                       pair_text(hi.u, hi.v),
                   pair_text(lo.u, lo.v));
    }
  };
  for (const auto &[m, c] : p.terms()) check(m);
  return report;
}

DiamondResult diamond_from_polynomial(const BivariatePolynomial &p, Exponent d) {
  if (p.max_u() > d || p.max_v() > d)
    throw std::domain_error("diamond_from_polynomial: exponent exceeds dimension");

  HodgeDiamond diamond(d);
  for (const auto &[m, c] : p.terms()) diamond.at(m.u, m.v) = (m.total_degree() % 2 == 0) ? c : Integer(-c);

  for (Exponent a = 0; a <= d; ++a) {
    for (Exponent b = 0; b <= d; ++b) {
      const Integer &h = diamond.at(a, b);
      if (h < 0)
        return DiamondViolation{DiamondViolation::Kind::negative, a, b, h,
                                "h^{" + std::to_string(a) + "," + std::to_string(b) + "} = " + h.str() + " < 0"};
    }
  }
  for (Exponent a = 0; a <= d; ++a) {
    for (Exponent b = 0; b <= d; ++b) {
      const Integer &h = diamond.at(a, b);
      if (h != diamond.at(b, a) || h != diamond.at(d - a, d - b))
        return DiamondViolation{DiamondViolation::Kind::asymmetric, a, b, h,
                                "h^{" + std::to_string(a) + "," + std::to_string(b) +
                                    "} breaks h^{p,q} = h^{q,p} = h^{d-p,d-q}"};
    }
  }
  return diamond;
}

}  // namespace stringy
