#include "stringy/format.hpp"

#include <cctype>

namespace stringy {

namespace {

enum class Style { text, latex };

std::string power(const std::string &base, Exponent k, Style style) {
  if (k == 1) return base;
  if (style == Style::latex) return base + "^{" + std::to_string(k) + "}";
  return base + "^" + std::to_string(k);
}

std::string monomial_string(const Monomial &m, Style style) {
  if (m.u == 0 && m.v == 0) return "";
  if (m.is_diagonal()) return m.u == 1 ? "uv" : power("(uv)", m.u, style);
  std::string s;
  if (m.u > 0) s += power("u", m.u, style);
  if (m.v > 0) s += power("v", m.v, style);
  return s;
}

template <typename Terms>
std::string terms_string(const Terms &terms, Style style) {
  std::string out;
  bool first = true;
  for (const auto &[m, c] : terms) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_string(m, style);
    if (mono.empty() || magnitude != 1) out += magnitude.str();
    out += mono;
    first = false;
  }
  return first ? "0" : out;
}

std::string factor_string(Exponent m, Style style) {
  return "(" + monomial_string({m, m}, style) + " - 1)";
}

std::string rational_string(const StringyRational &x, Style style) {
  const std::string num = terms_string(x.numerator().graded_terms(), style);
  if (x.has_trivial_denominator()) return num;
  std::string den;
  for (Exponent m : x.denominator().factors()) den += factor_string(m, style);
  if (style == Style::latex) return "\\frac{" + num + "}{" + den + "}";
  return "(" + num + ") / " + den;
}

}  // namespace

std::string to_text(const BivariatePolynomial &p) { return terms_string(p.graded_terms(), Style::text); }
std::string to_text(const StringyRational &x) { return rational_string(x, Style::text); }
std::string to_text(const TruncatedBiseries &s) { return to_text(s.terms()) + " + ..."; }

std::string to_latex(const BivariatePolynomial &p) { return terms_string(p.graded_terms(), Style::latex); }
std::string to_latex(const StringyRational &x) { return rational_string(x, Style::latex); }
std::string to_latex(const TruncatedBiseries &s) { return to_latex(s.terms()) + " + \\cdots"; }

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

// Unreduced fraction of two polynomials; reduced only at the very end.
struct Fraction {
  BivariatePolynomial num = BivariatePolynomial::constant(1);
  BivariatePolynomial den = BivariatePolynomial::constant(1);
};

Fraction add(const Fraction &a, const Fraction &b, bool subtract) {
  if (a.den == b.den) return {subtract ? a.num - b.num : a.num + b.num, a.den};
  BivariatePolynomial rhs = b.num * a.den;
  return {subtract ? a.num * b.den - rhs : a.num * b.den + rhs, a.den * b.den};
}

Fraction multiply(const Fraction &a, const Fraction &b) { return {a.num * b.num, a.den * b.den}; }

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Fraction parse() {
    Fraction f = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip();
    if (s_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'u' || c == 'v' || c == '(' || c == '{' ||
           s_.compare(pos_, 5, "\\frac") == 0;
  }

  // expression := ['+'|'-'] term (('+'|'-') term)*
  Fraction expression() {
    bool negative = false;
    if (accept("-")) {
      negative = true;
    } else {
      accept("+");
    }
    Fraction acc = term();
    if (negative) acc.num = -acc.num;
    while (true) {
      if (accept("+")) {
        acc = add(acc, term(), false);
      } else if (accept("-")) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  // term := factor+ ['/' factor+]
  Fraction term() {
    Fraction acc = product();
    if (accept("/")) {
      Fraction divisor = product();
      acc = multiply(acc, Fraction{divisor.den, divisor.num});
    }
    return acc;
  }

  Fraction product() {
    if (!at_factor_start()) fail("expected a factor");
    Fraction acc = factor();
    while (at_factor_start()) acc = multiply(acc, factor());
    return acc;
  }

  Fraction factor() {
    Fraction base = atom();
    if (accept("^")) {
      Exponent k = 0;
      if (accept("{")) {
        k = number();
        expect("}");
      } else {
        k = number();
      }
      Fraction r;
      for (Exponent n = 0; n < k; ++n) r = multiply(r, base);
      return r;
    }
    return base;
  }

  Exponent number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoull(std::string(s_.substr(start, pos_ - start)));
  }

  Fraction atom() {
    skip();
    if (accept("\\frac")) {
      expect("{");
      Fraction top = expression();
      expect("}");
      expect("{");
      Fraction bottom = expression();
      expect("}");
      return multiply(top, Fraction{bottom.den, bottom.num});
    }
    if (accept("(")) {
      Fraction inner = expression();
      expect(")");
      return inner;
    }
    if (accept("{")) {
      Fraction inner = expression();
      expect("}");
      return inner;
    }
    if (accept("u")) return {BivariatePolynomial::monomial(1, 0), BivariatePolynomial::constant(1)};
    if (accept("v")) return {BivariatePolynomial::monomial(0, 1), BivariatePolynomial::constant(1)};
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("unexpected character");
    return {BivariatePolynomial::constant(Integer(std::string(s_.substr(start, pos_ - start)))),
            BivariatePolynomial::constant(1)};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

StringyRational parse_rational(std::string_view expr) {
  Fraction f = Parser(expr).parse();
  if (f.den.is_zero()) throw ParseError("division by zero");

  // Peel cyclotomic factors off the denominator, largest m first: the largest
  // m with (t^m - 1) | den is always one of the factors of a genuine product.
  BivariatePolynomial den = f.den;
  std::vector<Exponent> factors;
  while (!(den.size() == 1 && den.terms().begin()->first == Monomial{0, 0})) {
    if (!den.is_t_polynomial()) throw ParseError("denominator is not a product of (uv)^m - 1 factors");
    bool found = false;
    for (Exponent m = den.max_u(); m >= 1; --m) {
      if (auto q = cyclo_divide_exact(den, m)) {
        factors.push_back(m);
        den = std::move(*q);
        found = true;
        break;
      }
    }
    if (!found) throw ParseError("denominator is not a product of (uv)^m - 1 factors");
  }
  const Integer unit = den.coefficient(0, 0);
  if (unit != 1 && unit != -1) throw ParseError("denominator is not a product of (uv)^m - 1 factors");
  BivariatePolynomial num = unit == 1 ? f.num : -f.num;
  return StringyRational::normalized(std::move(num), CycloProduct(std::move(factors)));
}

}  // namespace stringy
