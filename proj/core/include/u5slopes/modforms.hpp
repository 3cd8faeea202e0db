#pragma once

#include <optional>

#include "u5slopes/characters.hpp"
#include "u5slopes/series.hpp"

namespace u5s {

// E_4 = 1 + 240 sum sigma_3(n) q^n
LaurentSeries e4_series(const PrecisionContext& ctx, int window);
// Delta = eta(q)^24, lead q^1
LaurentSeries delta_series(const PrecisionContext& ctx, int window);
// j = E_4^3 / Delta, lead q^-1 with coefficient 1
ScaledSeries j_invariant(const PrecisionContext& ctx, int window);

// Uniformizers: t_25 = eta(q)/eta(q^25), t_5 = (eta(q)/eta(q^5))^6, T = 1/t_25.
LaurentSeries t25_series(const PrecisionContext& ctx, int window);
LaurentSeries t5_series(const PrecisionContext& ctx, int window);
LaurentSeries big_t_series(const PrecisionContext& ctx, int window);

struct RatFnsReport {
  bool pass = false;
  int first_bad_exponent = 0;
  QuarterVal worst = QuarterVal::infinite();  // max deviation valuation; INFINITE on pass
};
// Both modular-equation identities, checked coefficientwise after clearing
// denominators: j*t5^5 = (t5^2+250 t5+3125)^3 and
// t5*(t25^4+5 t25^3+15 t25^2+25 t25+25) = t25^5.
RatFnsReport verify_rat_fns(const PrecisionContext& ctx, int window);

// 5^e * B_{1,chi} = sum_{a=1}^{f} chi(a) a as a ring element (f = 5^e).
RingElement bernoulli_sum(const DirichletCharacter& chi, const RingBasics& basics);

// sigma_{0,chi}(n) = sum_{d|n} chi(d) for n < window, by a divisor sieve.
std::vector<RingElement> sigma_chi(const DirichletCharacter& chi, const RingBasics& basics,
                                   int window);

// Normalized weight-1 Eisenstein series 1 - (2/B_{1,chi}) sum sigma_{0,chi}(n) q^n.
ScaledSeries eisenstein_weight1(const DirichletCharacter& chi, const RingBasics& basics,
                                int window);

// E*_{1,chi} / V(E*_{1,chi}) as an integral q-series with constant term 1.
LaurentSeries uv_ratio(const DirichletCharacter& chi, const RingBasics& basics, int window);

// Closed form of the weight-1 conductor-5 multiplier in the T-coordinate:
//   E*_{1,tau}/V(E*_{1,tau}) = (1 + 5T + 5(2+I)T^2) / (1 + (2+I)T + (2+I)T^2)
// for tau(2) = I; the conjugate tau swaps I -> -I. The literature prints the
// same denominator with the fractional part scaled by the unit -(3+I)/2.
struct MultiplierForm {
  std::array<RingElement, 3> num;
  std::array<RingElement, 3> den;
};
MultiplierForm multiplier_closed_form(const RingBasics& basics, bool conjugate_i);
MultiplierForm multiplier_printed_form(const RingBasics& basics, bool conjugate_i);

struct MultiplierReport {
  int matched_tau_exponent = -1;  // exponent of the tau matching the printed shape
  bool canonical_exact = false;   // computed ratio equals the closed form exactly
  bool printed_proportional = false;  // printed fractional part = mu * computed one
  bool printed_valuations_match = false;
  std::string mu_decimal;  // canonical residue string of the unit mu
  bool v2i_ok = false;     // v(2+I) = v(3-I) = 1
};
// Compares the computed T-expansions of both tau-ratios against the closed
// forms through T^t_degree.
MultiplierReport verify_multiplier(const RingBasics& basics, int t_degree);

}  // namespace u5s
