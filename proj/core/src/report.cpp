#include "stringy/report.hpp"

#include <algorithm>

namespace stringy {

bool ValidationReport::has_errors() const noexcept {
  return std::any_of(findings.begin(), findings.end(), [](const Finding &f) { return f.severity == Severity::error; });
}

void ValidationReport::error(std::string code, std::string message, std::string location) {
  findings.push_back({Severity::error, std::move(code), std::move(message), std::move(location)});
}

void ValidationReport::warning(std::string code, std::string message, std::string location) {
  findings.push_back({Severity::warning, std::move(code), std::move(message), std::move(location)});
}

void ValidationReport::merge(const ValidationReport &other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

std::string to_string(Severity s) { return s == Severity::error ? "error" : "warning"; }

}  // namespace stringy
