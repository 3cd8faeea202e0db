#include <doctest.h>

#include "test_helpers.hpp"
#include "u5slopes/modforms.hpp"

using namespace u5s;

namespace {
PrecisionContext& ctx32() {
  static PrecisionContext ctx(32);
  return ctx;
}
const RingBasics& basics() {
  static RingBasics b = RingBasics::make(ctx32());
  return b;
}
}  // namespace

TEST_CASE("E4 coefficients") {
  auto& ctx = ctx32();
  LaurentSeries e4 = e4_series(ctx, 10);
  CHECK(e4.at(0) == RingElement::one(ctx));
  CHECK(e4.at(1) == RingElement::from_int(ctx, 240));
  CHECK(e4.at(2) == RingElement::from_int(ctx, 2160));  // 240 * sigma_3(2) = 240 * 9
}

TEST_CASE("j invariant expansion") {
  auto& ctx = ctx32();
  ScaledSeries j = j_invariant(ctx, 40);
  CHECK(j.scale == 0);
  CHECK(j.body.lead == -1);
  CHECK(j.body.at(-1) == RingElement::one(ctx));
  CHECK(j.body.at(0) == RingElement::from_int(ctx, 744));
  CHECK(j.body.at(1) == RingElement::from_int(ctx, 196884));
  CHECK(j.body.at(2) == RingElement::from_int(ctx, 21493760));
}

TEST_CASE("modular equation identities") {
  auto& ctx = ctx32();
  RatFnsReport rep = verify_rat_fns(ctx, 200);
  CHECK(rep.pass);
  CHECK(rep.worst.is_infinite());

  // negative control: perturbing one t5 coefficient breaks identity 2 at a
  // predictable exponent
  const int W = 80;
  LaurentSeries t5 = t5_series(ctx, W);
  LaurentSeries t25 = t25_series(ctx, W);
  t5.at(3) = t5.at(3) + RingElement::one(ctx);
  LaurentSeries den = ls_mul(ls_mul(t25, t25), ls_mul(t25, t25));
  den = ls_add(den, ls_scale(ls_mul(ls_mul(t25, t25), t25), RingElement::from_int(ctx, 5)));
  den = ls_add(den, ls_scale(ls_mul(t25, t25), RingElement::from_int(ctx, 15)));
  den = ls_add(den, ls_scale(t25, RingElement::from_int(ctx, 25)));
  LaurentSeries c25 = LaurentSeries::make(ctx, 0, W);
  c25.at(0) = RingElement::from_int(ctx, 25);
  den = ls_add(den, c25);
  LaurentSeries t25_5 = ls_mul(ls_mul(ls_mul(t25, t25), ls_mul(t25, t25)), t25);
  LaurentSeries diff = ls_sub(ls_mul(t5, den), t25_5);
  // t5 perturbed at q^3, denominator lead q^-4: first deviation at q^-1
  int first_bad = diff.window;
  for (int e = diff.lead; e < diff.window; ++e)
    if (!diff.coeff_negligible(e)) {
      first_bad = e;
      break;
    }
  CHECK(first_bad == -1);
}

TEST_CASE("generalized Bernoulli sums") {
  const RingBasics& b = basics();
  auto& ctx = ctx32();
  // 5*B_{1,tau} = -3-I for the designated tau (finite-sum oracle)
  RingElement s = bernoulli_sum(tau_designated(), b);
  CHECK(s == -(RingElement::from_int(ctx, 3) + b.I));
  // conjugate: -3+I, of valuation 1
  RingElement sc = bernoulli_sum(tau_conjugate(), b);
  CHECK(sc == -(RingElement::from_int(ctx, 3) - b.I));
  CHECK(sc.valuation() == QuarterVal(4));

  // conductor 25: v(S) = 7/4 on the f2 classes, 2 on the f1 classes
  CHECK(bernoulli_sum({25, 1}, b).valuation() == QuarterVal(7));
  CHECK(bernoulli_sum({25, 9}, b).valuation() == QuarterVal(7));
  CHECK(bernoulli_sum({25, 3}, b).valuation() == QuarterVal(8));
  CHECK(bernoulli_sum({25, 19}, b).valuation() == QuarterVal(8));
}

TEST_CASE("weight-1 Eisenstein series") {
  const RingBasics& b = basics();
  auto& ctx = ctx32();
  for (DirichletCharacter chi : {DirichletCharacter{5, 1}, DirichletCharacter{25, 1},
                                 DirichletCharacter{25, 3}}) {
    ScaledSeries e = eisenstein_weight1(chi, b, 40);
    CHECK(e.scale == 0);
    CHECK(e.body.at(0) == RingElement::one(ctx));
    // q-coefficient times S equals -2*5^e (sigma(1) = 1)
    RingElement s = bernoulli_sum(chi, b);
    std::int64_t f = chi.modulus == 5 ? -10 : -50;
    CHECK(e.body.at(1) * s == RingElement::from_int(ctx, f));
  }
}

TEST_CASE("sigma by divisor loop equals Dirichlet convolution") {
  const RingBasics& b = basics();
  DirichletCharacter chi{25, 7};
  const int W = 60;
  auto sig = sigma_chi(chi, b, W);
  for (int n = 1; n < W; ++n) {
    RingElement acc = RingElement::zero(ctx32());
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) acc = acc + chi.value(d, b);
    CHECK(acc == sig[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("uv ratio basics") {
  const RingBasics& b = basics();
  auto& ctx = ctx32();
  const int W = 60;
  for (DirichletCharacter chi : {DirichletCharacter{5, 1}, DirichletCharacter{25, 1},
                                 DirichletCharacter{25, 3}}) {
    LaurentSeries r = uv_ratio(chi, b, W);
    CHECK(r.at(0) == RingElement::one(ctx));
    // integrality: every coefficient has valuation >= 0 by construction; spot
    // check the series recovers E* from V(E*): r * V(G0) = G0
    ScaledSeries g = eisenstein_weight1(chi, b, W);
    LaurentSeries lhs = ls_mul(r, ls_v5(g.body, W), W);
    for (int e = 0; e < lhs.window; ++e) {
      if (!g.body.in_window(e)) break;
      CHECK((lhs.at(e) - g.body.at(e)).valuation().q >= lhs.prec - kGuardQuarters);
    }
  }
}

TEST_CASE("uv ratio is invariant under unit rescaling") {
  const RingBasics& b = basics();
  auto& ctx = ctx32();
  const int W = 40;
  DirichletCharacter chi{25, 1};
  LaurentSeries base = uv_ratio(chi, b, W);
  // rescaling the Eisenstein numerator by any unit leaves G/V(G) unchanged
  test::SplitMix rng(43);
  ScaledSeries e = eisenstein_weight1(chi, b, W);
  for (int trial = 0; trial < 5; ++trial) {
    RingElement lambda = test::random_unit(ctx, rng);
    LaurentSeries scaled = ls_scale(e.body, lambda);
    LaurentSeries ratio = ls_mul(scaled, ls_invert(ls_v5(scaled, W)), W);
    for (int e2 = 0; e2 < std::min(base.window, ratio.window); ++e2)
      CHECK((ratio.at(e2) - base.at(e2)).valuation().q >= base.prec - kGuardQuarters);
  }
}

TEST_CASE("multiplier closed form") {
  MultiplierReport rep = verify_multiplier(basics(), 60);
  CHECK(rep.v2i_ok);
  CHECK(rep.canonical_exact);
  CHECK(rep.matched_tau_exponent == tau_designated().exponent);
  CHECK(rep.printed_proportional);
  CHECK(rep.printed_valuations_match);
  // mu = -(3+I)/2
  auto& ctx = ctx32();
  const RingBasics& b = basics();
  RingElement mu = -((RingElement::from_int(ctx, 3) + b.I) * invert_unit(RingElement::from_int(ctx, 2)));
  CHECK(rep.mu_decimal == ctx.decimal(mu.coeff(0).a));
}
