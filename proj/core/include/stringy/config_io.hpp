#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "stringy/config.hpp"
#include "stringy/rational.hpp"
#include "stringy/series.hpp"

namespace stringy {

// Polynomial literal: [[i, j, c], ...] with c a nonzero integer, written as a
// JSON number when it fits in 64 bits and as a decimal string otherwise.
// Rational literal: {"num": [...], "den": [m1, m2, ...]}.

nlohmann::json integer_to_json(const Integer &c);
/// Accepts JSON integers and decimal strings; throws ConfigError otherwise.
Integer integer_from_json(const nlohmann::json &j, const std::string &where);

nlohmann::json polynomial_to_json(const BivariatePolynomial &p);
BivariatePolynomial polynomial_from_json(const nlohmann::json &j, const std::string &where);

nlohmann::json rational_to_json(const StringyRational &x);
/// Parses and normalizes.
StringyRational rational_from_json(const nlohmann::json &j, const std::string &where);

nlohmann::json series_to_json(const TruncatedBiseries &s);

/// Strict config parsing: unknown fields, non-integer discrepancies and
/// unknown labels are ConfigErrors.
ResolutionConfig config_from_json(const nlohmann::json &j);
ResolutionConfig load_config(const std::filesystem::path &path);
nlohmann::json config_to_json(const ResolutionConfig &cfg);

}  // namespace stringy
