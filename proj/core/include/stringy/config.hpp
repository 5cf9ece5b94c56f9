#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stringy/hodge.hpp"
#include "stringy/polynomial.hpp"
#include "stringy/report.hpp"

namespace stringy {

/// Set of exceptional components as a bit mask over component indices.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxComponentsHard = 64;

enum class StrataConvention { open, closed };

struct Component {
  std::string label;
  std::int64_t discrepancy = 0;
};

/// Log-resolution data: the resolved space, its exceptional components with
/// their discrepancies, and the Hodge–Deligne polynomials of the strata.
///
/// `strata` maps a nonempty subset I to H(D_I) (closed convention) or
/// H(D_I^o) (open convention). Absent subsets and zero polynomials both mean
/// the stratum is empty. `ambient` is always H(X) for the whole resolved
/// space, independent of the convention.
struct ResolutionConfig {
  Exponent dimension = 1;
  BivariatePolynomial ambient;
  std::vector<Component> components;
  StrataConvention convention = StrataConvention::closed;
  std::map<Subset, BivariatePolynomial> strata;
  std::optional<BivariatePolynomial> singular_locus;

  /// Stratum value, zero when absent.
  BivariatePolynomial stratum(Subset s) const;
  /// Index of `label`; throws ConfigError when unknown or ambiguous.
  std::size_t index_of(const std::string &label) const;
  /// Subset from labels; throws ConfigError on unknown or repeated labels.
  Subset subset_of(const std::vector<std::string> &labels) const;
  /// Comma-joined, lexicographically sorted labels of s.
  std::string key_of(Subset s) const;
  Subset all_components() const;
};

enum class ValidationMode { lenient, strict };

struct ValidationOptions {
  /// Soft cap on the number of components; subset walks are exponential in
  /// the depth of the stored lattice.
  std::size_t max_components = 24;
};

/// Malformed input: unknown labels, bad JSON shape, and similar.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by operations that require a validated config.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport &report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Re-expresses the strata table in the target convention by inclusion–
/// exclusion over the subset lattice:
///   closed from open: H(D_I)   = sum_{J ⊇ I} H(D_J^o)
///   open from closed: H(D_I^o) = sum_{J ⊇ I} (-1)^{|J|-|I|} H(D_J)
ResolutionConfig convert_strata(const ResolutionConfig &cfg, StrataConvention target);

ValidationReport validate(const ResolutionConfig &cfg, ValidationMode mode, const ValidationOptions &options = {});

/// Throws ValidationError unless validate() returns an empty report.
void require_valid(const ResolutionConfig &cfg, ValidationMode mode, const ValidationOptions &options = {});

/// H(D_label) in the closed convention, claimed dimension d - 1.
HodgeDelignePolynomial component_closed_hd(const ResolutionConfig &cfg, const std::string &label);

/// H(D) for the whole exceptional locus D = union of all D_i.
BivariatePolynomial exceptional_total_hd(const ResolutionConfig &cfg);

/// Every nonempty subset of some stored key.
std::vector<Subset> subsets_below_keys(const ResolutionConfig &cfg);

int subset_size(Subset s) noexcept;

/// floor((d - 4) / 2): discrepancies must exceed this for the coefficient
/// decomposition to hold.
std::int64_t discrepancy_floor(Exponent d) noexcept;

std::string to_string(StrataConvention c);

}  // namespace stringy
