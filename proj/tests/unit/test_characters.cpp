#include <doctest.h>

#include <map>

#include "test_helpers.hpp"
#include "u5slopes/characters.hpp"

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

TEST_CASE("discrete logs") {
  CHECK(dlog25(2) == 1);
  CHECK(dlog25(6) == 8);  // 2^8 = 256 = 6 mod 25
  CHECK(dlog25(1) == 0);
  CHECK(dlog25(10) == -1);
  CHECK(dlog5(3) == 3);
  CHECK(dlog5(4) == 2);
}

TEST_CASE("enumeration of odd primitive characters mod 25") {
  auto chars = enumerate_odd_primitive_25();
  REQUIRE(chars.size() == 8);
  std::vector<int> exps;
  for (const auto& c : chars) exps.push_back(c.exponent);
  CHECK(exps == std::vector<int>{1, 3, 7, 9, 11, 13, 17, 19});
  const RingElement one = RingElement::one(ctx32());
  for (const auto& chi : chars) {
    CHECK(chi.odd());
    CHECK(chi.primitive());
    CHECK(chi.value(-1, basics()) == -one);
    // chi(6) is a primitive 5th root of unity
    RingElement x6 = chi.value(6, basics());
    CHECK(x6 == chi.value(2, basics()).pow(8));
    CHECK(x6.pow(5) == one);
    CHECK(x6 != one);
    // chi(2) has exact order 20
    RingElement x2 = chi.value(2, basics());
    CHECK(x2.pow(20) == one);
    for (int d : {1, 2, 4, 5, 10}) CHECK(x2.pow(static_cast<std::uint64_t>(d)) != one);
  }
}

TEST_CASE("multiplicativity and vanishing") {
  test::SplitMix rng(41);
  DirichletCharacter chi{25, 3};
  for (int trial = 0; trial < 100; ++trial) {
    std::int64_t m = 1 + rng.small(200), n = 1 + rng.small(200);
    RingElement lhs = chi.value(m * n, basics());
    RingElement rhs = chi.value(m, basics()) * chi.value(n, basics());
    CHECK(lhs == rhs);
  }
  CHECK(chi.value(10, basics()).is_zero());
  CHECK(chi.value(25, basics()).is_zero());
}

TEST_CASE("designated tau") {
  DirichletCharacter tau = tau_designated();
  const RingBasics& b = basics();
  CHECK(tau.value(2, b) == b.I);
  CHECK(tau.value(4, b) == -RingElement::one(ctx32()));
  CHECK(tau.value(3, b) == -b.I);
  DirichletCharacter bar = tau_conjugate();
  CHECK(bar.value(2, b) == -b.I);
  // chi_1 * tau^2 has exponent 11
  CHECK(char_product({25, 1}, tau, 2).exponent == 11);
}

TEST_CASE("phi20 factorization") {
  const PrecisionContext& ctx = ctx32();
  Phi20Factorization fac = factor_phi20(ctx);

  // residues of the two quartics mod 5 (constant first)
  static constexpr int r1[5] = {1, 3, 4, 2, 1};  // x^4+2x^3+4x^2+3x+1
  static constexpr int r2[5] = {1, 2, 4, 3, 1};  // x^4+3x^3+4x^2+2x+1
  for (int i = 0; i < 5; ++i) {
    CHECK(ctx.mod5(fac.f1[static_cast<std::size_t>(i)].coeff(0).a) == r1[i]);
    CHECK(ctx.mod5(fac.f2[static_cast<std::size_t>(i)].coeff(0).a) == r2[i]);
  }

  // independent oracle: f1 equals the product over the four primitive 20th
  // roots of unity congruent to 2 mod pi, f2 the complementary product
  const RingBasics& b = basics();
  auto root_product = [&](std::vector<int> js) {
    std::vector<RingElement> poly = {RingElement::one(ctx)};
    for (int j : js) {
      std::vector<RingElement> next(poly.size() + 1, RingElement::zero(ctx));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = next[i + 1] + poly[i];
        next[i] = next[i] - poly[i] * b.zeta20_pow[static_cast<std::size_t>(j)];
      }
      poly = next;
    }
    return poly;
  };
  auto p1 = root_product({3, 7, 11, 19});
  auto p2 = root_product({1, 9, 13, 17});
  for (int i = 0; i < 5; ++i) {
    CHECK(p1[static_cast<std::size_t>(i)] == fac.f1[static_cast<std::size_t>(i)]);
    CHECK(p2[static_cast<std::size_t>(i)] == fac.f2[static_cast<std::size_t>(i)]);
  }

  // each primitive 20th root is annihilated by exactly one factor, and the
  // product of substituted values vanishes
  for (int j : {1, 3, 7, 9, 11, 13, 17, 19}) {
    RingElement x = b.zeta20_pow[static_cast<std::size_t>(j)];
    RingElement v1 = poly_eval(std::span<const RingElement>(fac.f1.data(), 5), x);
    RingElement v2 = poly_eval(std::span<const RingElement>(fac.f2.data(), 5), x);
    bool z1 = v1.is_zero() || v1.valuation().q >= 4 * 32 - 2;
    bool z2 = v2.is_zero() || v2.valuation().q >= 4 * 32 - 2;
    CHECK(z1 != z2);
    CHECK((v1 * v2).valuation().q >= 4 * 32 - 2);
  }
}

TEST_CASE("classification by annihilating factor") {
  Phi20Factorization fac = factor_phi20(ctx32());
  std::map<int, CharacterClass> expected = {
      {1, CharacterClass::F2},  {3, CharacterClass::F1},  {7, CharacterClass::F1},
      {9, CharacterClass::F2},  {11, CharacterClass::F1}, {13, CharacterClass::F2},
      {17, CharacterClass::F2}, {19, CharacterClass::F1}};
  int f1_count = 0;
  for (const auto& chi : enumerate_odd_primitive_25()) {
    CharacterClass cls = classify(chi, fac, basics());
    CHECK(cls == expected[chi.exponent]);
    if (cls == CharacterClass::F1) ++f1_count;
  }
  CHECK(f1_count == 4);

  // Galois conjugation over Q_5 fixes the class: the conjugacy orbit of a is
  // {a, 9a, 13a, 17a} mod 20 (the f2-annihilated exponents act)
  for (const auto& chi : enumerate_odd_primitive_25()) {
    CharacterClass cls = classify(chi, fac, basics());
    for (int g : {9, 13, 17}) {
      DirichletCharacter conj{25, (chi.exponent * g) % 20};
      CHECK(classify(conj, fac, basics()) == cls);
    }
  }

  CHECK_THROWS_AS(classify({25, 2}, fac, basics()), u5s::domain_error);
  CHECK_THROWS_AS(classify({25, 5}, fac, basics()), u5s::domain_error);
}

TEST_CASE("the literal chi(6) criterion is vacuous") {
  // f1(chi(6)) and f2(chi(6)) are units for every character: chi(6) = 1 mod pi
  // and both quartics evaluate to 1 there
  Phi20Factorization fac = factor_phi20(ctx32());
  for (const auto& chi : enumerate_odd_primitive_25()) {
    RingElement x6 = chi.value(6, basics());
    CHECK(poly_eval(std::span<const RingElement>(fac.f1.data(), 5), x6).valuation() == QuarterVal(0));
    CHECK(poly_eval(std::span<const RingElement>(fac.f2.data(), 5), x6).valuation() == QuarterVal(0));
  }
}
