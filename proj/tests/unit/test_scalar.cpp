#include <doctest.h>

#include "test_helpers.hpp"
#include "u5slopes/scalar.hpp"

using namespace u5s;

namespace {

// reference mulmod for moduli below 2^63
u64 ref_mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }

u64 pow5(unsigned n) {
  u64 r = 1;
  while (n--) r *= 5;
  return r;
}

u64 low_u64(const PrecisionContext& ctx, const Limbs& x) { return ctx.canonical(x).w[0]; }

}  // namespace

TEST_CASE("context modulus and round trips") {
  PrecisionContext ctx(12);
  CHECK(ctx.digits() == 12);
  CHECK(ctx.limbs() == 1);
  CHECK(ctx.modulus().w[0] == pow5(12));
  CHECK(low_u64(ctx, ctx.from_int(42)) == 42);
  CHECK(low_u64(ctx, ctx.from_int(-1)) == pow5(12) - 1);
  CHECK(ctx.decimal(ctx.from_int(123456)) == "123456");

  PrecisionContext big(32);
  CHECK(big.limbs() == 2);
  CHECK(big.decimal(big.from_int(240)) == "240");
  PrecisionContext huge(100);
  CHECK(huge.limbs() == 4);
  CHECK(huge.decimal(huge.from_int(-3)) ==
        "7888609052210118054117285652827862296732064351090230047702789306640622");
  // 5^100 - 3
  CHECK_THROWS_AS(PrecisionContext(7), u5s::domain_error);
  CHECK_THROWS_AS(PrecisionContext(109), u5s::domain_error);
}

TEST_CASE("arithmetic against a word-size oracle") {
  PrecisionContext ctx(12);
  const u64 m = pow5(12);
  test::SplitMix rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    u64 a = rng.next() % m, b = rng.next() % m;
    Limbs ma = ctx.from_int(static_cast<std::int64_t>(a));
    Limbs mb = ctx.from_int(static_cast<std::int64_t>(b));
    Limbs s, d, p;
    ctx.add(ma, mb, s);
    ctx.sub(ma, mb, d);
    ctx.mul(ma, mb, p);
    CHECK(low_u64(ctx, s) == (a + b) % m);
    CHECK(low_u64(ctx, d) == (a + m - b % m) % m);
    CHECK(low_u64(ctx, p) == ref_mulmod(a, b, m));
  }
}

TEST_CASE("multi-limb multiplication consistency") {
  // (x*y)*z == x*(y*z) and distributivity, at 4 limbs
  PrecisionContext ctx(100);
  test::SplitMix rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Limbs x = ctx.from_int(static_cast<std::int64_t>(rng.next() >> 1));
    Limbs y = ctx.from_int(static_cast<std::int64_t>(rng.next() >> 1));
    Limbs z = ctx.from_int(static_cast<std::int64_t>(rng.next() >> 1));
    Limbs xy, yz, a, b, s, xs, xy2, xz;
    ctx.mul(x, y, xy);
    ctx.mul(y, z, yz);
    ctx.mul(xy, z, a);
    ctx.mul(x, yz, b);
    CHECK(a == b);
    ctx.add(y, z, s);
    ctx.mul(x, s, xs);
    ctx.mul(x, z, xz);
    ctx.add(xy, xz, xy2);
    CHECK(xs == xy2);
  }
}

TEST_CASE("valuation and exact shift") {
  PrecisionContext ctx(32);
  CHECK(ctx.v5(ctx.from_int(1)) == 0);
  CHECK(ctx.v5(ctx.from_int(50)) == 2);
  CHECK(ctx.v5(ctx.zero()) == 32);
  Limbs x = ctx.from_int(75);
  Limbs y = ctx.shift_down_pow5(x, 1);
  // y = 15 mod 5^31: compare low digits via decimal of difference
  Limbs d;
  ctx.sub(y, ctx.from_int(15), d);
  CHECK(ctx.v5(d) >= 31);
  CHECK_THROWS_AS(ctx.shift_down_pow5(ctx.from_int(7), 1), u5s::valuation_error);
}

TEST_CASE("mod 5 reads off the Montgomery form") {
  for (unsigned digits : {12u, 32u, 40u, 100u}) {
    PrecisionContext ctx(digits);
    for (std::int64_t v = -7; v < 8; ++v) {
      CHECK(ctx.mod5(ctx.from_int(v)) == static_cast<int>(((v % 5) + 5) % 5));
    }
  }
}
