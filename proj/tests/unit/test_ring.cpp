#include <doctest.h>

#include "test_helpers.hpp"
#include "u5slopes/ring.hpp"

using namespace u5s;

namespace {
PrecisionContext& ctx32() {
  static PrecisionContext ctx(32);
  return ctx;
}
RingElement s_elt(const PrecisionContext& ctx) { return RingElement::from_residue(ctx, F25{0, 1}); }
}  // namespace

TEST_CASE("defining relations") {
  auto& ctx = ctx32();
  RingElement pi = RingElement::pi(ctx);
  CHECK(pi * pi * pi * pi == RingElement::from_int(ctx, 5));
  CHECK(pi.mul_pi_pow(3) == pi * pi * pi * pi);  // pi * pi^3 = 5
  RingElement s = s_elt(ctx);
  CHECK(s * s == RingElement::from_int(ctx, 3));
  RingElement one = RingElement::one(ctx);
  CHECK((one + pi) * (one - pi) == one - pi * pi);
}

TEST_CASE("valuation") {
  auto& ctx = ctx32();
  RingElement pi = RingElement::pi(ctx);
  CHECK((pi.mul_pi_pow(2) * RingElement::from_int(ctx, 5)).valuation() == QuarterVal(7));
  CHECK(RingElement::zero(ctx).valuation().is_infinite());
  RingElement I = teichmuller(ctx, F25{3, 0});
  CHECK((RingElement::from_int(ctx, 2) + I).valuation() == QuarterVal(4));
}

TEST_CASE("valuation is additive on products") {
  auto& ctx = ctx32();
  test::SplitMix rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    RingElement x = test::random_unit(ctx, rng).mul_pi_pow(static_cast<int>(rng.small(9)));
    RingElement y = test::random_unit(ctx, rng).mul_pi_pow(static_cast<int>(rng.small(9)));
    QuarterVal vx = x.valuation(), vy = y.valuation();
    REQUIRE(!vx.is_infinite());
    REQUIRE(!vy.is_infinite());
    CHECK((x * y).valuation() == vx + vy);
  }
}

TEST_CASE("invert_unit") {
  auto& ctx = ctx32();
  RingElement one = RingElement::one(ctx);
  CHECK(invert_unit(one) == one);

  RingElement inv2 = invert_unit(RingElement::from_int(ctx, 2));
  CHECK(inv2 * RingElement::from_int(ctx, 2) == one);
  // 2^-1 = 13 mod 25 (extended Euclid oracle)
  CHECK((inv2 - RingElement::from_int(ctx, 13)).valuation().q >= 8);

  // geometric series oracle: (1+pi)^-1 = 1 - pi + pi^2 - pi^3 + 5*(...)
  RingElement pi = RingElement::pi(ctx);
  RingElement invp = invert_unit(one + pi);
  RingElement geo = one - pi + pi * pi - pi * pi * pi;
  CHECK((invp - geo).valuation().q >= 4);

  CHECK_THROWS_AS(invert_unit(RingElement::from_int(ctx, 5)), valuation_error);
  CHECK_THROWS_AS(invert_unit(RingElement::zero(ctx)), valuation_error);

  test::SplitMix rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    RingElement x = test::random_unit(ctx, rng);
    CHECK(invert_unit(x) * x == one);
  }
}

TEST_CASE("teichmuller lifts") {
  auto& ctx = ctx32();
  RingElement one = RingElement::one(ctx);
  CHECK(teichmuller(ctx, F25{1, 0}) == one);

  // x -> x^5 oracle in Z/25: 2^5 = 32 = 7, and 7 is the fixpoint digit
  RingElement t2 = teichmuller(ctx, F25{2, 0});
  CHECK((t2 - RingElement::from_int(ctx, 7)).valuation().q >= 8);

  // 3^5 = 243 = 18 mod 25 and 18^2 = -1 mod 25
  RingElement t3 = teichmuller(ctx, F25{3, 0});
  CHECK((t3 - RingElement::from_int(ctx, 18)).valuation().q >= 8);
  CHECK(t3 * t3 == -one);

  // all 24 nonzero residues have exact order dividing 24
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      if (a == 0 && b == 0) continue;
      RingElement t = teichmuller(ctx, F25{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
      CHECK(t.pow(24) == one);
      CHECK(t.residue() == F25{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
    }
  CHECK_THROWS_AS(teichmuller(ctx, F25{0, 0}), u5s::domain_error);
}

TEST_CASE("hensel lifting") {
  auto& ctx = ctx32();
  RingElement one = RingElement::one(ctx);
  // x^2 + 1 seeded at 3 gives the same root as the Teichmuller route
  std::vector<RingElement> f = {one, RingElement::zero(ctx), one};
  CHECK(hensel_root(f, F25{3, 0}) == build_I(ctx));
  // x^2 - 3 seeded at s returns s exactly
  std::vector<RingElement> g = {RingElement::from_int(ctx, -3), RingElement::zero(ctx), one};
  CHECK(hensel_root(g, F25{0, 1}) == s_elt(ctx));
  // double root is rejected: (x-1)^2
  std::vector<RingElement> h = {one, RingElement::from_int(ctx, -2), one};
  CHECK_THROWS_AS(hensel_root(h, F25{1, 0}), hensel_error);
}

TEST_CASE("embedding constants") {
  auto& ctx = ctx32();
  RingElement one = RingElement::one(ctx);
  RingElement I = build_I(ctx);
  CHECK((I - RingElement::from_int(ctx, 18)).valuation().q >= 8);
  CHECK(I * I == -one);
  CHECK((RingElement::from_int(ctx, 3) - I).valuation() == QuarterVal(4));
  // the other square root of -1 pairs with a unit
  CHECK((RingElement::from_int(ctx, 2) - I).valuation() == QuarterVal(0));

  RingElement z5 = build_zeta5(ctx);
  CHECK(z5.pow(5) == one);
  CHECK(z5 != one);
  CHECK((z5 - one).valuation() == QuarterVal(1));
  // Phi_5(z5) = 0
  RingElement phi5 = z5.pow(4) + z5.pow(3) + z5.pow(2) + z5 + one;
  CHECK(phi5.is_zero());
  // seed convention: z5 = 1 + s*pi mod pi^2
  RingElement diff = z5 - one - s_elt(ctx).mul_pi();
  CHECK(diff.valuation().q >= 2);

  RingElement z20 = build_zeta20(ctx);
  CHECK(z20.pow(20) == one);
  CHECK(z20.pow(10) == -one);
  CHECK(z20.pow(4) == z5.pow(4));
  for (int d : {1, 2, 4, 5, 10}) CHECK(z20.pow(static_cast<std::uint64_t>(d)) != one);
}

TEST_CASE("exact pi shift round trip") {
  auto& ctx = ctx32();
  test::SplitMix rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    RingElement x = test::random_element(ctx, rng);
    int w = static_cast<int>(rng.small(7));
    // multiplying by pi^w sheds the top w digits of the high coefficients, so
    // the round trip agrees up to that precision loss
    RingElement back = x.mul_pi_pow(w).shift_right_exact(w);
    QuarterVal dv = (back - x).valuation();
    CHECK(dv.q >= 4 * 32 - w - 4);
  }
  CHECK_THROWS_AS(RingElement::one(ctx).shift_right_exact(1), valuation_error);
}

TEST_CASE("context mixing is rejected") {
  PrecisionContext other(16);
  CHECK_THROWS_AS(RingElement::one(ctx32()) + RingElement::one(other), context_error);
}
