#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "stringy/rational.hpp"
#include "stringy/series.hpp"

namespace stringy {

/// "1 + 7uv + 9(uv)^2 - u^2v"; terms in graded order.
std::string to_text(const BivariatePolynomial &p);
/// "(N) / ((uv)^7 - 1)(uv - 1)", or just the numerator when the denominator
/// is trivial.
std::string to_text(const StringyRational &x);
/// Series terms followed by " + ..." (the tail beyond the horizon).
std::string to_text(const TruncatedBiseries &s);

std::string to_latex(const BivariatePolynomial &p);
/// "\frac{N}{((uv)^{7} - 1)}"
std::string to_latex(const StringyRational &x);
std::string to_latex(const TruncatedBiseries &s);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses an expression in u, v built from integers, +, -, juxtaposition,
/// ^ (nonnegative integer powers), parentheses, braces, "/" and \frac{}{}.
/// Accepts both the text and the LaTeX renderings. The denominator must be a
/// product of factors (uv)^m - 1 up to sign.
StringyRational parse_rational(std::string_view expr);

}  // namespace stringy
