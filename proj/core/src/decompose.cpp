#include <stdexcept>
#include <string>

#include "stringy/engine.hpp"

namespace stringy {

namespace {

// Which boundary case applies to (i, j) with i >= j, and which discrepancy
// feeds it. For d = 3 the boundary never applies: there the alternating sum
// already skips crepant components and nothing else survives.
struct Boundary {
  bool active = false;
  std::int64_t discrepancy = 0;
  bool off_diagonal = false;  // d odd, i = (d+1)/2, j = (d-1)/2
};

Boundary boundary_case(Exponent d, Exponent i, Exponent j) {
  if (d < 4) return {};
  if (d % 2 == 0) {
    if (i == d / 2 && j == d / 2) return {true, static_cast<std::int64_t>(d / 2) - 1, false};
    return {};
  }
  const auto a = static_cast<std::int64_t>((d - 3) / 2);
  if (i == (d - 1) / 2 && j == (d - 1) / 2) return {true, a, false};
  if (i == (d + 1) / 2 && j == (d - 1) / 2) return {true, a, true};
  return {};
}

}  // namespace

std::vector<DecompositionRow> decompose_coefficients(const ResolutionConfig &cfg,
                                                     const std::vector<std::pair<Exponent, Exponent>> &pairs) {
  require_valid(cfg, ValidationMode::strict);
  const Exponent d = cfg.dimension;
  for (const auto &[i, j] : pairs) {
    if (i + j > d)
      throw std::domain_error("pair (" + std::to_string(i) + "," + std::to_string(j) + ") has i + j > d = " +
                              std::to_string(d));
  }

  const ResolutionConfig closed = convert_strata(cfg, StrataConvention::closed);
  const TruncatedBiseries series = expand_rational(stringy_e_closed(cfg), d);

  Subset crepant = 0;
  for (std::size_t l = 0; l < cfg.components.size(); ++l)
    if (cfg.components[l].discrepancy == 0) crepant |= Subset{1} << l;

  auto component_coefficient = [&](std::size_t l, Exponent p, Exponent q) {
    return closed.stratum(Subset{1} << l).coefficient(p, q);
  };

  std::vector<DecompositionRow> rows;
  rows.reserve(pairs.size());
  for (const auto &[i0, j0] : pairs) {
    const Exponent i = std::max(i0, j0);
    const Exponent j = std::min(i0, j0);

    DecompositionRow row;
    row.i = i0;
    row.j = j0;
    row.direct = series.coefficient(i, j);
    row.c_term = cfg.ambient.coefficient(i, j);

    // sum_{k=1}^{j} (-1)^k sum_{|J| = k} c^J_{i-k, j-k}, over non-crepant J.
    for (const auto &[s, poly] : closed.strata) {
      const auto k = static_cast<Exponent>(subset_size(s));
      if (k > j || (s & crepant)) continue;
      const Integer c = poly.coefficient(i - k, j - k);
      row.alternating_sum += (k % 2 == 0) ? c : Integer(-c);
    }

    const Boundary b = boundary_case(d, i, j);
    if (b.active) {
      for (std::size_t l = 0; l < cfg.components.size(); ++l) {
        if (cfg.components[l].discrepancy != b.discrepancy) continue;
        row.r_term += component_coefficient(l, b.off_diagonal ? 1 : 0, 0);
        // dim H^{d-1,d-1}(H^{2d-2}(D_l)) or dim H^{d-2,d-1}(H^{2d-3}(D_l)),
        // read off the Hodge–Deligne coefficient with its weight sign.
        row.s_term += b.off_diagonal ? Integer(-component_coefficient(l, d - 2, d - 1))
                                     : component_coefficient(l, d - 1, d - 1);
      }
    }

    row.implied_hodge_dim = ((i + j) % 2 == 0 ? row.direct : Integer(-row.direct)) - row.s_term;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace stringy
