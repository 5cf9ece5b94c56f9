#pragma once

#include <string>
#include <vector>

namespace stringy {

enum class Severity { error, warning };

struct Finding {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  std::string location;
};

/// Validation outcome. An empty report means the input was accepted.
struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const noexcept { return findings.empty(); }
  bool has_errors() const noexcept;

  void error(std::string code, std::string message, std::string location = {});
  void warning(std::string code, std::string message, std::string location = {});
  void merge(const ValidationReport &other);
};

std::string to_string(Severity s);

}  // namespace stringy
