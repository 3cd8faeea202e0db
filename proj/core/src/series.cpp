#include "u5slopes/series.hpp"

#include <algorithm>

#include "u5slopes/errors.hpp"

namespace u5s {

LaurentSeries LaurentSeries::make(const PrecisionContext& ctx, int lead, int window) {
  if (window < lead) throw precision_error("series window is empty");
  LaurentSeries s;
  s.ctx = &ctx;
  s.lead = lead;
  s.window = window;
  s.prec = 4 * static_cast<int>(ctx.digits());
  s.c.assign(static_cast<std::size_t>(window - lead), RingElement::zero(ctx));
  return s;
}

bool LaurentSeries::coeff_negligible(int exponent) const {
  if (exponent < lead) return true;
  const QuarterVal v = at(exponent).valuation();
  return v.q >= prec - kGuardQuarters;
}

namespace {

void check_ctx(const LaurentSeries& f, const LaurentSeries& g) {
  check_same_context(f.ctx, g.ctx);
}

}  // namespace

LaurentSeries ls_add(const LaurentSeries& f, const LaurentSeries& g) {
  check_ctx(f, g);
  int lead = std::min(f.lead, g.lead);
  int window = std::min(f.window, g.window);
  if (window <= lead) throw precision_error("series add: empty intersected window");
  LaurentSeries out = LaurentSeries::make(*f.ctx, lead, window);
  out.prec = std::min(f.prec, g.prec);
  for (int e = lead; e < window; ++e) {
    RingElement v = RingElement::zero(*f.ctx);
    if (f.in_window(e)) v = v + f.at(e);
    if (g.in_window(e)) v = v + g.at(e);
    out.at(e) = v;
  }
  return out;
}

LaurentSeries ls_sub(const LaurentSeries& f, const LaurentSeries& g) {
  return ls_add(f, ls_neg(g));
}

LaurentSeries ls_neg(const LaurentSeries& f) {
  LaurentSeries out = f;
  for (auto& x : out.c) x = -x;
  return out;
}

LaurentSeries ls_mul(const LaurentSeries& f, const LaurentSeries& g, int window_cap) {
  check_ctx(f, g);
  int lead = f.lead + g.lead;
  int window = std::min({f.lead + g.window, g.lead + f.window, window_cap});
  if (window <= lead) throw precision_error("series mul: empty result window");
  LaurentSeries out = LaurentSeries::make(*f.ctx, lead, window);
  out.prec = std::min(f.prec, g.prec);
  for (int i = f.lead; i < f.window; ++i) {
    const RingElement& fi = f.at(i);
    if (fi.is_zero()) continue;
    const int jmax = std::min(g.window, window - i);
    for (int j = g.lead; j < jmax; ++j) {
      const RingElement& gj = g.at(j);
      if (gj.is_zero()) continue;
      out.at(i + j) = out.at(i + j) + fi * gj;
    }
  }
  return out;
}

LaurentSeries ls_scale(const LaurentSeries& f, const RingElement& r) {
  LaurentSeries out = f;
  for (auto& x : out.c) x = x * r;
  return out;
}

LaurentSeries ls_mul_pi_pow(const LaurentSeries& f, int e) {
  LaurentSeries out = f;
  for (auto& x : out.c) x = x.mul_pi_pow(e);
  return out;
}

LaurentSeries ls_invert(const LaurentSeries& f) {
  if (f.length() <= 0) throw inversion_error("series invert: empty window");
  const RingElement& lead_coeff = f.c.front();
  if (lead_coeff.valuation() != QuarterVal(0))
    throw inversion_error("series invert: lead coefficient is not a unit");
  const PrecisionContext& ctx = *f.ctx;
  RingElement inv0 = invert_unit(lead_coeff);
  const int len = f.length();
  LaurentSeries out = LaurentSeries::make(ctx, -f.lead, -f.lead + len);
  out.prec = f.prec;
  out.c[0] = inv0;
  for (int n = 1; n < len; ++n) {
    RingElement acc = RingElement::zero(ctx);
    for (int k = 1; k <= n; ++k) {
      const RingElement& fk = f.c[static_cast<std::size_t>(k)];
      if (fk.is_zero()) continue;
      acc = acc + fk * out.c[static_cast<std::size_t>(n - k)];
    }
    out.c[static_cast<std::size_t>(n)] = -(inv0 * acc);
  }
  return out;
}

LaurentSeries ls_u5(const LaurentSeries& f) {
  auto ceil_div5 = [](int x) { return x >= 0 ? (x + 4) / 5 : -((-x) / 5); };
  int lead = ceil_div5(f.lead);
  int window = ceil_div5(f.window);
  if (window <= lead) throw precision_error("u5: empty result window");
  LaurentSeries out = LaurentSeries::make(*f.ctx, lead, window);
  out.prec = f.prec;
  for (int e = lead; e < window; ++e)
    if (f.in_window(5 * e)) out.at(e) = f.at(5 * e);
  return out;
}

LaurentSeries ls_v5(const LaurentSeries& f, int window_cap) {
  int lead = 5 * f.lead;
  int window = std::min(5 * (f.window - 1) + 1, window_cap);
  if (window <= lead) throw precision_error("v5: empty result window");
  LaurentSeries out = LaurentSeries::make(*f.ctx, lead, window);
  out.prec = f.prec;
  for (int e = f.lead; e < f.window; ++e) {
    if (5 * e >= window) break;
    out.at(5 * e) = f.at(e);
  }
  return out;
}

ScaledSeries normalize(const LaurentSeries& f) {
  std::int64_t w = QuarterVal::kInf;
  for (const auto& x : f.c) {
    QuarterVal v = x.valuation();
    if (!v.is_infinite()) w = std::min(w, v.q);
  }
  if (w >= QuarterVal::kInf) return ScaledSeries{0, f};  // all-zero body
  if (w >= f.prec - kGuardQuarters)
    throw precision_error("normalize: series indistinguishable from zero at working precision");
  ScaledSeries out;
  out.scale = static_cast<int>(w);
  out.body = f;
  if (w > 0) {
    for (auto& x : out.body.c)
      if (!x.is_zero()) x = x.shift_right_exact(static_cast<int>(w));
    out.body.prec = f.prec - static_cast<int>(w);
  }
  return out;
}

ScaledSeries series_arith(const ScaledSeries& f, const ScaledSeries& g, SeriesOp op) {
  if (op == SeriesOp::mul) {
    ScaledSeries out;
    out.scale = f.scale + g.scale;
    out.body = ls_mul(f.body, g.body);
    return out;
  }
  // add: align to the smaller scale, then renormalize (cancellation can raise
  // the minimal valuation).
  int s = std::min(f.scale, g.scale);
  LaurentSeries fb = f.scale > s ? ls_mul_pi_pow(f.body, f.scale - s) : f.body;
  LaurentSeries gb = g.scale > s ? ls_mul_pi_pow(g.body, g.scale - s) : g.body;
  ScaledSeries out = normalize(ls_add(fb, gb));
  out.scale += s;
  return out;
}

ScaledSeries series_invert(const ScaledSeries& f) {
  ScaledSeries out;
  out.scale = -f.scale;
  out.body = ls_invert(f.body);
  return out;
}

ScaledSeries series_u5(const ScaledSeries& f) { return {f.scale, ls_u5(f.body)}; }

ScaledSeries series_v5(const ScaledSeries& f, int window_cap) {
  return {f.scale, ls_v5(f.body, window_cap)};
}

LaurentSeries euler_product(const PrecisionContext& ctx, int d, int window) {
  LaurentSeries out = LaurentSeries::make(ctx, 0, window);
  out.at(0) = RingElement::one(ctx);
  for (int k = 1;; ++k) {
    // generalized pentagonal exponents d*k(3k-1)/2 and d*k(3k+1)/2, sign (-1)^k
    long e1 = static_cast<long>(d) * k * (3L * k - 1) / 2;
    long e2 = static_cast<long>(d) * k * (3L * k + 1) / 2;
    if (e1 >= window && e2 >= window) break;
    std::int64_t sgn = (k % 2 == 0) ? 1 : -1;
    if (e1 < window) out.at(static_cast<int>(e1)) = RingElement::from_int(ctx, sgn);
    if (e2 < window) out.at(static_cast<int>(e2)) = RingElement::from_int(ctx, sgn);
  }
  return out;
}

LaurentSeries eta_quotient(const PrecisionContext& ctx, const std::map<int, int>& exponents,
                           int window) {
  long pref24 = 0;
  for (auto [d, r] : exponents) pref24 += static_cast<long>(d) * r;
  if (pref24 % 24 != 0)
    throw domain_error("eta_quotient: q-power prefactor sum(d*r_d)/24 is not an integer");
  const int lead = static_cast<int>(pref24 / 24);

  LaurentSeries num = LaurentSeries::make(ctx, 0, window);
  num.at(0) = RingElement::one(ctx);
  LaurentSeries den = num;
  bool have_den = false;
  for (auto [d, r] : exponents) {
    if (r == 0) continue;
    LaurentSeries p = euler_product(ctx, d, window);
    for (int i = 0; i < (r > 0 ? r : -r); ++i) {
      if (r > 0)
        num = ls_mul(p, num, window);
      else {
        den = ls_mul(p, den, window);
        have_den = true;
      }
    }
  }
  LaurentSeries body = have_den ? ls_mul(num, ls_invert(den), window) : num;
  body.lead += lead;
  body.window += lead;
  return body;
}

}  // namespace u5s
