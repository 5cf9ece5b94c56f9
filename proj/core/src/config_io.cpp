#include "stringy/config_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace stringy {

using nlohmann::json;

namespace {

bool is_decimal(const std::string &s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Exponent exponent_from_json(const json &j, const std::string &where) {
  if (j.is_number_unsigned()) return j.get<Exponent>();
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw ConfigError(where + ": negative exponent " + std::to_string(v));
    return static_cast<Exponent>(v);
  }
  throw ConfigError(where + ": exponent must be a nonnegative integer");
}

std::vector<std::string> split_key(const std::string &key) {
  std::vector<std::string> parts;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!key.empty() && key.back() == ',') parts.emplace_back();
  return parts;
}

void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
  for (const auto &[k, v] : obj.items())
    if (!allowed.count(k)) throw ConfigError(where + ": unknown field '" + k + "'");
}

}  // namespace

json integer_to_json(const Integer &c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Integer integer_from_json(const json &j, const std::string &where) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto &s = j.get_ref<const std::string &>();
    if (!is_decimal(s)) throw ConfigError(where + ": '" + s + "' is not a decimal integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw ConfigError(where + ": expected an integer (number or decimal string)");
}

json polynomial_to_json(const BivariatePolynomial &p) {
  json out = json::array();
  for (const auto &[m, c] : p.terms()) out.push_back(json::array({m.u, m.v, integer_to_json(c)}));
  return out;
}

BivariatePolynomial polynomial_from_json(const json &j, const std::string &where) {
  if (!j.is_array()) throw ConfigError(where + ": polynomial must be a list of [i, j, c] triples");
  BivariatePolynomial p;
  std::set<Monomial> seen;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string here = where + "[" + std::to_string(k) + "]";
    const auto &t = j[k];
    if (!t.is_array() || t.size() != 3) throw ConfigError(here + ": expected [i, j, c]");
    const Monomial m{exponent_from_json(t[0], here), exponent_from_json(t[1], here)};
    const Integer c = integer_from_json(t[2], here);
    if (c == 0) throw ConfigError(here + ": zero coefficients must be omitted");
    if (!seen.insert(m).second) throw ConfigError(here + ": repeated exponent pair");
    p.add_term(m, c);
  }
  return p;
}

json rational_to_json(const StringyRational &x) {
  json den = json::array();
  for (Exponent m : x.denominator().factors()) den.push_back(m);
  return json{{"num", polynomial_to_json(x.numerator())}, {"den", den}};
}

StringyRational rational_from_json(const json &j, const std::string &where) {
  if (!j.is_object()) throw ConfigError(where + ": rational must be an object {num, den}");
  reject_unknown(j, {"num", "den"}, where);
  if (!j.contains("num")) throw ConfigError(where + ": missing 'num'");
  BivariatePolynomial num = polynomial_from_json(j.at("num"), where + ".num");
  std::vector<Exponent> den;
  if (j.contains("den")) {
    if (!j.at("den").is_array()) throw ConfigError(where + ".den: expected a list of positive integers");
    for (const auto &m : j.at("den")) {
      const Exponent e = exponent_from_json(m, where + ".den");
      if (e == 0) throw ConfigError(where + ".den: factor exponents must be positive");
      den.push_back(e);
    }
  }
  return StringyRational::normalized(std::move(num), CycloProduct(std::move(den)));
}

json series_to_json(const TruncatedBiseries &s) {
  return json{{"horizon", s.horizon()}, {"coefficients", polynomial_to_json(s.terms())}};
}

ResolutionConfig config_from_json(const json &j) {
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown(j, {"dimension", "ambient", "components", "strata_convention", "strata", "singular_locus"}, "config");

  ResolutionConfig cfg;
  if (!j.contains("dimension")) throw ConfigError("config: missing 'dimension'");
  cfg.dimension = exponent_from_json(j.at("dimension"), "dimension");
  if (cfg.dimension < 1) throw ConfigError("dimension: must be at least 1");
  if (!j.contains("ambient")) throw ConfigError("config: missing 'ambient'");
  cfg.ambient = polynomial_from_json(j.at("ambient"), "ambient");

  if (j.contains("components")) {
    const auto &comps = j.at("components");
    if (!comps.is_array()) throw ConfigError("components: expected a list");
    for (std::size_t k = 0; k < comps.size(); ++k) {
      const std::string where = "components[" + std::to_string(k) + "]";
      const auto &c = comps[k];
      if (!c.is_object()) throw ConfigError(where + ": expected {label, discrepancy}");
      reject_unknown(c, {"label", "discrepancy"}, where);
      if (!c.contains("label") || !c.at("label").is_string()) throw ConfigError(where + ": 'label' must be a string");
      if (!c.contains("discrepancy")) throw ConfigError(where + ": missing 'discrepancy'");
      const auto &a = c.at("discrepancy");
      if (!a.is_number_integer())
        throw ConfigError(where + ": discrepancy must be an integer (rational discrepancies are not supported)");
      if (a.is_number_unsigned() && a.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw ConfigError(where + ": discrepancy out of range");
      cfg.components.push_back({c.at("label").get<std::string>(), a.get<std::int64_t>()});
    }
  }
  if (cfg.components.size() > kMaxComponentsHard)
    throw ConfigError("components: at most 64 components are supported");

  if (j.contains("strata_convention")) {
    const auto &conv = j.at("strata_convention");
    if (conv == "open") {
      cfg.convention = StrataConvention::open;
    } else if (conv == "closed") {
      cfg.convention = StrataConvention::closed;
    } else {
      throw ConfigError("strata_convention: expected \"open\" or \"closed\"");
    }
  }

  if (j.contains("strata")) {
    const auto &strata = j.at("strata");
    if (!strata.is_object()) throw ConfigError("strata: expected an object keyed by comma-joined labels");
    for (const auto &[key, value] : strata.items()) {
      const std::string where = "strata[" + key + "]";
      const auto labels = split_key(key);
      if (labels.empty()) throw ConfigError(where + ": empty subset key");
      Subset s = 0;
      try {
        s = cfg.subset_of(labels);
      } catch (const ConfigError &e) {
        throw ConfigError(where + ": " + e.what());
      }
      if (cfg.strata.count(s)) throw ConfigError(where + ": duplicate subset key");
      BivariatePolynomial p = polynomial_from_json(value, where);
      if (!p.is_zero()) cfg.strata.emplace(s, std::move(p));
    }
  }

  if (j.contains("singular_locus")) cfg.singular_locus = polynomial_from_json(j.at("singular_locus"), "singular_locus");
  return cfg;
}

ResolutionConfig load_config(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

json config_to_json(const ResolutionConfig &cfg) {
  json comps = json::array();
  for (const auto &c : cfg.components) comps.push_back({{"label", c.label}, {"discrepancy", c.discrepancy}});
  json strata = json::object();
  for (const auto &[key, poly] : cfg.strata)
    if (!poly.is_zero()) strata[cfg.key_of(key)] = polynomial_to_json(poly);
  json out{{"dimension", cfg.dimension},
           {"ambient", polynomial_to_json(cfg.ambient)},
           {"components", comps},
           {"strata_convention", to_string(cfg.convention)},
           {"strata", strata}};
  if (cfg.singular_locus) out["singular_locus"] = polynomial_to_json(*cfg.singular_locus);
  return out;
}

}  // namespace stringy
