#include "stringy/config.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace stringy {

namespace {

bool contains(Subset outer, Subset inner) { return (outer & inner) == inner; }

void check_symmetric(const BivariatePolynomial &p, const std::string &where, ValidationReport &report) {
  for (const auto &[m, c] : p.terms()) {
    if (m.is_diagonal()) continue;
    const Integer mirror = p.coefficient(m.swapped());
    // Report each unordered pair once: from the (i > j) side, or from the
    // (i < j) side when the mirror term is missing from the map.
    if (mirror == c || (m.u < m.v && mirror != 0)) continue;
    const Monomial hi = m.u > m.v ? m : m.swapped();
    report.error("strata.symmetry",
                 "coefficient at (" + std::to_string(hi.u) + "," + std::to_string(hi.v) + ") differs from (" +
                     std::to_string(hi.v) + "," + std::to_string(hi.u) + ")",
                 where);
  }
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("configuration failed validation"), report_(std::move(report)) {}

int subset_size(Subset s) noexcept { return std::popcount(s); }

std::int64_t discrepancy_floor(Exponent d) noexcept {
  const auto n = static_cast<std::int64_t>(d) - 4;
  return n >= 0 ? n / 2 : -((-n + 1) / 2);
}

std::string to_string(StrataConvention c) { return c == StrataConvention::open ? "open" : "closed"; }

BivariatePolynomial ResolutionConfig::stratum(Subset s) const {
  auto it = strata.find(s);
  return it == strata.end() ? BivariatePolynomial{} : it->second;
}

std::size_t ResolutionConfig::index_of(const std::string &label) const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].label != label) continue;
    if (found) throw ConfigError("ambiguous component label '" + label + "'");
    found = i;
  }
  if (!found) throw ConfigError("unknown component label '" + label + "'");
  return *found;
}

Subset ResolutionConfig::subset_of(const std::vector<std::string> &labels) const {
  Subset s = 0;
  for (const auto &label : labels) {
    const std::size_t i = index_of(label);
    if (i >= kMaxComponentsHard) throw ConfigError("component index beyond the supported 64 components");
    const Subset bit = Subset{1} << i;
    if (s & bit) throw ConfigError("label '" + label + "' repeated in a stratum key");
    s |= bit;
  }
  return s;
}

std::string ResolutionConfig::key_of(Subset s) const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < components.size() && i < kMaxComponentsHard; ++i)
    if (s & (Subset{1} << i)) labels.push_back(components[i].label);
  std::sort(labels.begin(), labels.end());
  std::string key;
  for (const auto &l : labels) {
    if (!key.empty()) key += ',';
    key += l;
  }
  return key;
}

Subset ResolutionConfig::all_components() const {
  const std::size_t n = std::min(components.size(), kMaxComponentsHard);
  return n == 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

std::vector<Subset> subsets_below_keys(const ResolutionConfig &cfg) {
  std::set<Subset> all;
  for (const auto &[key, poly] : cfg.strata) {
    if (poly.is_zero()) continue;
    // Walk the nonempty submasks of key.
    for (Subset s = key; s != 0; s = (s - 1) & key) all.insert(s);
  }
  return {all.begin(), all.end()};
}

ResolutionConfig convert_strata(const ResolutionConfig &cfg, StrataConvention target) {
  if (cfg.convention == target) return cfg;

  ResolutionConfig out = cfg;
  out.convention = target;
  out.strata.clear();
  const bool to_open = target == StrataConvention::open;
  for (Subset i : subsets_below_keys(cfg)) {
    BivariatePolynomial value;
    for (const auto &[j, poly] : cfg.strata) {
      if (poly.is_zero() || !contains(j, i)) continue;
      if (to_open && (subset_size(j) - subset_size(i)) % 2 != 0) {
        value -= poly;
      } else {
        value += poly;
      }
    }
    if (!value.is_zero()) out.strata.emplace(i, std::move(value));
  }
  return out;
}

ValidationReport validate(const ResolutionConfig &cfg, ValidationMode mode, const ValidationOptions &options) {
  ValidationReport report;
  const std::size_t n = cfg.components.size();

  if (cfg.dimension < 1) report.error("config.dimension", "dimension must be at least 1");
  if (n > kMaxComponentsHard) {
    report.error("config.components", "at most 64 components are supported");
  } else if (n > options.max_components) {
    report.error("config.components", std::to_string(n) + " components exceed the configured cap of " +
                                          std::to_string(options.max_components));
  }

  std::set<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    const auto &c = cfg.components[i];
    const std::string where = "components[" + std::to_string(i) + "]";
    if (c.label.empty()) report.error("component.label", "empty label", where);
    if (c.label.find(',') != std::string::npos) report.error("component.label", "label contains ','", where);
    if (!labels.insert(c.label).second) report.error("component.label", "duplicate label '" + c.label + "'", where);
    if (c.discrepancy < 0)
      report.error("component.discrepancy",
                   "discrepancy " + std::to_string(c.discrepancy) + " is negative (Gorenstein canonical needs a >= 0)",
                   where);
  }

  check_symmetric(cfg.ambient, "ambient", report);
  if (cfg.singular_locus) check_symmetric(*cfg.singular_locus, "singular_locus", report);

  const Subset universe = cfg.all_components();
  for (const auto &[key, poly] : cfg.strata) {
    if (poly.is_zero()) continue;
    const std::string where = "strata[" + cfg.key_of(key) + "]";
    if (key == 0) {
      report.error("strata.key", "empty subset key", "strata");
      continue;
    }
    if (!contains(universe, key)) {
      report.error("strata.key", "key refers to a component index that does not exist", "strata");
      continue;
    }
    check_symmetric(poly, where, report);
    if (cfg.convention == StrataConvention::closed) {
      // D_J is contained in D_I for I ⊂ J, so a nonempty D_J needs every D_I.
      for (Subset s = (key - 1) & key; s != 0; s = (s - 1) & key) {
        if (cfg.stratum(s).is_zero()) {
          report.error("strata.absent",
                       "stratum " + cfg.key_of(key) + " is nonempty but its face " + cfg.key_of(s) + " is absent",
                       where);
          break;
        }
      }
    }
  }

  if (mode == ValidationMode::lenient) return report;

  if (cfg.dimension < 3) report.error("strict.dimension", "dimension must be at least 3");

  const std::int64_t bound = discrepancy_floor(cfg.dimension);
  for (std::size_t i = 0; i < n; ++i) {
    const auto &c = cfg.components[i];
    if (c.discrepancy <= bound)
      report.error("strict.discrepancy",
                   "discrepancy bound violated: a = " + std::to_string(c.discrepancy) + " must exceed floor((d-4)/2) = " +
                       std::to_string(bound),
                   "components[" + std::to_string(i) + "]");
  }

  // Serre reflection of closed strata is necessary (not sufficient) for
  // genuinely smooth projective strata.
  const char *note = " (necessary condition only: passing does not prove the data is geometric)";
  auto serre = [&](const BivariatePolynomial &p, std::int64_t dim, const std::string &where) {
    if (dim < 0) {
      report.error("strict.serre", "stratum is nonempty but its dimension would be negative", where);
      return;
    }
    const auto sub = hd_validate_smooth_projective({p, static_cast<Exponent>(dim)}, static_cast<Exponent>(dim));
    for (const auto &f : sub.findings) {
      if (f.code != "hd.serre") continue;
      report.error("strict.serre", f.message + note, where);
    }
  };
  serre(cfg.ambient, static_cast<std::int64_t>(cfg.dimension), "ambient");
  const ResolutionConfig closed = convert_strata(cfg, StrataConvention::closed);
  for (const auto &[key, poly] : closed.strata) {
    if (key == 0 || !contains(universe, key)) continue;
    serre(poly, static_cast<std::int64_t>(cfg.dimension) - subset_size(key), "strata[" + closed.key_of(key) + "]");
  }
  return report;
}

void require_valid(const ResolutionConfig &cfg, ValidationMode mode, const ValidationOptions &options) {
  auto report = validate(cfg, mode, options);
  if (!report.ok()) throw ValidationError(std::move(report));
}

HodgeDelignePolynomial component_closed_hd(const ResolutionConfig &cfg, const std::string &label) {
  const std::size_t i = cfg.index_of(label);
  const ResolutionConfig closed = convert_strata(cfg, StrataConvention::closed);
  HodgeDelignePolynomial h{closed.stratum(Subset{1} << i), std::nullopt};
  if (cfg.dimension >= 1) h.claimed_dimension = cfg.dimension - 1;
  return h;
}

BivariatePolynomial exceptional_total_hd(const ResolutionConfig &cfg) {
  // H(D) = sum over nonempty I of H(D_I^o).
  const ResolutionConfig open = convert_strata(cfg, StrataConvention::open);
  BivariatePolynomial total;
  for (const auto &[key, poly] : open.strata) total += poly;
  return total;
}

}  // namespace stringy
