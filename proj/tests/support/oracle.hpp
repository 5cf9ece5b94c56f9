#pragma once

// Brute-force reference implementations used to freeze expected values.
// Nothing here calls the engine's strata conversion, normalization or series
// code; everything is dense arrays, naive loops and exact rationals.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "stringy/config.hpp"
#include "stringy/rational.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using stringy::Exponent;
using stringy::Integer;

/// Dense coefficient table, grid[i][j] for 0 <= i, j <= size - 1.
using Grid = std::vector<std::vector<Integer>>;

Grid to_grid(const stringy::BivariatePolynomial &p, std::size_t size);
stringy::BivariatePolynomial from_grid(const Grid &g);

Rational evaluate(const stringy::BivariatePolynomial &p, const Rational &u, const Rational &v);
Rational evaluate(const stringy::StringyRational &x, const Rational &u, const Rational &v);

/// Open strata by Möbius inversion over all 2^n subsets (closed input), or
/// by summing all supersets (open input to closed).
std::vector<stringy::BivariatePolynomial> open_strata(const stringy::ResolutionConfig &cfg);
std::vector<stringy::BivariatePolynomial> closed_strata(const stringy::ResolutionConfig &cfg);

/// E_st(u, v) at a point with uv not a root of unity, straight from
///   sum_I H(D_I^o) prod_{i in I} (uv - 1) / ((uv)^{a_i+1} - 1).
Rational evaluate_e_st(const stringy::ResolutionConfig &cfg, const Rational &u, const Rational &v);

/// b_{i,j} for i + j <= horizon, from the open formula with each factor
/// expanded as 1 / (1 + t + ... + t^a) by recurrence.
Grid e_st_series(const stringy::ResolutionConfig &cfg, Exponent horizon);

/// Dense long division by (uv)^m - 1; empty optional on a remainder.
std::optional<stringy::BivariatePolynomial> divide(const stringy::BivariatePolynomial &n, Exponent m);

/// Coefficients of t^0..t^horizon of a rational function P(t) / Q(t), Q(0) != 0.
std::vector<Rational> t_series(const std::vector<Integer> &p, const std::vector<Integer> &q, Exponent horizon);

}  // namespace oracle
