#pragma once

#include <map>
#include <vector>

#include "u5slopes/ring.hpp"

namespace u5s {

// Truncated Laurent series over R. Coefficients are stored for exponents
// lead..window-1; exponents below lead are exact zeros, exponents at or above
// window are outside the exactness domain. `prec` is the effective precision
// watermark in quarters (4N minus the pi-shifts consumed producing the
// series); coefficient digits at or above the watermark are not meaningful.
struct LaurentSeries {
  const PrecisionContext* ctx = nullptr;
  int lead = 0;
  int window = 0;
  int prec = 0;
  std::vector<RingElement> c;

  static LaurentSeries make(const PrecisionContext& ctx, int lead, int window);

  int length() const { return window - lead; }
  const RingElement& at(int exponent) const { return c[exponent - lead]; }
  RingElement& at(int exponent) { return c[exponent - lead]; }
  bool in_window(int exponent) const { return exponent >= lead && exponent < window; }

  // Zero test against the watermark with a 2-quarter guard band.
  bool coeff_negligible(int exponent) const;
};

LaurentSeries ls_add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries ls_sub(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries ls_neg(const LaurentSeries& f);
// Product, exact on the intersected validity window, optionally capped.
LaurentSeries ls_mul(const LaurentSeries& f, const LaurentSeries& g, int window_cap = 1 << 30);
LaurentSeries ls_scale(const LaurentSeries& f, const RingElement& r);
LaurentSeries ls_mul_pi_pow(const LaurentSeries& f, int e);
// Inverse of a series whose lead coefficient is a unit.
LaurentSeries ls_invert(const LaurentSeries& f);

// (U_5 f)(q^n) = f(q^{5n}); window shrinks to ceil(window/5).
LaurentSeries ls_u5(const LaurentSeries& f);
// (V f)(q^{5n}) = f(q^n); other coefficients zero.
LaurentSeries ls_v5(const LaurentSeries& f, int window_cap = 1 << 30);

// pi^scale * body with body normalized to min coefficient valuation 0.
struct ScaledSeries {
  int scale = 0;
  LaurentSeries body;
};

// Normalize: factor out the minimal coefficient valuation into the scale.
ScaledSeries normalize(const LaurentSeries& f);

enum class SeriesOp { add, mul };
ScaledSeries series_arith(const ScaledSeries& f, const ScaledSeries& g, SeriesOp op);
// Requires the lead coefficient of the body to be the (unit) minimum; throws
// inversion_error otherwise.
ScaledSeries series_invert(const ScaledSeries& f);
ScaledSeries series_u5(const ScaledSeries& f);
ScaledSeries series_v5(const ScaledSeries& f, int window_cap = 1 << 30);

// q^(sum d*r_d/24) * prod_d prod_n (1 - q^(dn))^(r_d), expanded through the
// pentagonal-number form of each factor. The prefactor must be integral.
LaurentSeries eta_quotient(const PrecisionContext& ctx, const std::map<int, int>& exponents,
                           int window);

// Euler product prod_n (1 - q^(dn)) as a sparse pentagonal series.
LaurentSeries euler_product(const PrecisionContext& ctx, int d, int window);

}  // namespace u5s
