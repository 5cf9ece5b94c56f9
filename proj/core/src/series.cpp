#include "stringy/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace stringy {

UnivariateTSeries::UnivariateTSeries(Exponent horizon, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(horizon + 1);
}

UnivariateTSeries operator*(const UnivariateTSeries &a, const UnivariateTSeries &b) {
  const Exponent h = std::min(a.horizon(), b.horizon());
  UnivariateTSeries r(h);
  for (Exponent i = 0; i <= h; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (Exponent j = 0; i + j <= h; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

UnivariateTSeries UnivariateTSeries::times(const BivariatePolynomial &t_poly) const {
  if (!t_poly.is_t_polynomial()) throw std::invalid_argument("UnivariateTSeries::times: polynomial is not in uv alone");
  UnivariateTSeries r(horizon());
  for (const auto &[m, c] : t_poly.terms()) {
    for (Exponent k = 0; k + m.u <= horizon(); ++k) r.coeffs_[k + m.u] += c * coeffs_[k];
  }
  return r;
}

UnivariateTSeries series_of_inverse_cyclo(Exponent m, Exponent horizon) {
  if (m == 0) throw std::invalid_argument("series_of_inverse_cyclo: m must be >= 1");
  UnivariateTSeries s(horizon);
  for (Exponent k = 0; k <= horizon; k += m) s[k] = -1;
  return s;
}

TruncatedBiseries::TruncatedBiseries(Exponent horizon, const BivariatePolynomial &p)
    : horizon_(horizon), coeffs_(p.truncated(horizon)) {}

Integer TruncatedBiseries::coefficient(Exponent i, Exponent j) const {
  if (i + j > horizon_) throw std::out_of_range("TruncatedBiseries: coefficient beyond horizon");
  return coeffs_.coefficient(i, j);
}

TruncatedBiseries TruncatedBiseries::times(const BivariatePolynomial &p) const {
  return TruncatedBiseries(horizon_, (coeffs_ * p.truncated(horizon_)).truncated(horizon_));
}

TruncatedBiseries expand_rational(const StringyRational &x, Exponent horizon) {
  const Exponent t_horizon = horizon / 2;
  UnivariateTSeries inverse(t_horizon);
  inverse[0] = 1;
  for (Exponent m : x.denominator().factors()) inverse = inverse * series_of_inverse_cyclo(m, t_horizon);

  BivariatePolynomial out;
  for (const auto &[mono, c] : x.numerator().terms()) {
    const Exponent deg = mono.total_degree();
    if (deg > horizon) continue;
    for (Exponent k = 0; deg + 2 * k <= horizon; ++k) {
      if (inverse[k] != 0) out.add_term({mono.u + k, mono.v + k}, c * inverse[k]);
    }
  }
  return TruncatedBiseries(horizon, out);
}

}  // namespace stringy
