#include "u5slopes/characters.hpp"

#include <algorithm>

#include "u5slopes/errors.hpp"

namespace u5s {

int dlog25(int n) {
  static const std::array<int, 25> table = [] {
    std::array<int, 25> t{};
    t.fill(-1);
    int pw = 1;
    for (int k = 0; k < 20; ++k) {
      t[static_cast<std::size_t>(pw)] = k;
      pw = (2 * pw) % 25;
    }
    return t;
  }();
  return table[static_cast<std::size_t>(((n % 25) + 25) % 25)];
}

int dlog5(int n) {
  static constexpr std::array<int, 5> table = {-1, 0, 1, 3, 2};
  return table[static_cast<std::size_t>(((n % 5) + 5) % 5)];
}

RingElement RingElement_zero(const RingBasics& b) { return RingElement::zero(*b.ctx); }

RingElement DirichletCharacter::value(std::int64_t n, const RingBasics& basics) const {
  if (n % 5 == 0) return RingElement::zero(*basics.ctx);
  if (modulus == 25) {
    int d = dlog25(static_cast<int>(((n % 25) + 25) % 25));
    return basics.zeta20_pow[static_cast<std::size_t>((exponent * d) % 20)];
  }
  // tau(2) = I = zeta20^5
  int d = dlog5(static_cast<int>(((n % 5) + 5) % 5));
  return basics.zeta20_pow[static_cast<std::size_t>((5 * exponent * d) % 20)];
}

std::vector<DirichletCharacter> enumerate_odd_primitive_25() {
  std::vector<DirichletCharacter> out;
  for (int a = 1; a < 20; a += 2)
    if (a % 5 != 0) out.push_back({25, a});
  return out;
}

DirichletCharacter tau_designated() { return {5, 1}; }
DirichletCharacter tau_conjugate() { return {5, 3}; }

DirichletCharacter char_product(const DirichletCharacter& chi25, const DirichletCharacter& tau5,
                                int t) {
  if (chi25.modulus != 25 || tau5.modulus != 5) throw domain_error("char_product: bad moduli");
  int e = (chi25.exponent + 5 * tau5.exponent * t) % 20;
  return {25, ((e % 20) + 20) % 20};
}

namespace {

// Small F_5[x] helpers for the Bezout data of the mod-5 factorization.
using F5Poly = std::vector<int>;  // constant-first, entries 0..4

F5Poly f5_trim(F5Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}
F5Poly f5_mul(const F5Poly& a, const F5Poly& b) {
  if (a.empty() || b.empty()) return {};
  F5Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % 5;
  return f5_trim(out);
}
F5Poly f5_sub(F5Poly a, const F5Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % 5 + 5) % 5;
  return f5_trim(a);
}
// division with remainder; divisor monic-normalized internally
void f5_divmod(const F5Poly& a, const F5Poly& b, F5Poly& q, F5Poly& r) {
  static constexpr int inv5[5] = {0, 1, 3, 2, 4};
  r = a;
  q.assign(a.size(), 0);
  int binv = inv5[b.back()];
  while (r.size() >= b.size() && !r.empty()) {
    int coef = (r.back() * binv) % 5;
    std::size_t shift = r.size() - b.size();
    q[shift] = coef;
    F5Poly t(shift, 0);
    t.insert(t.end(), b.begin(), b.end());
    for (auto& x : t) x = (x * coef) % 5;
    r = f5_sub(r, t);
    if (r.size() > shift + b.size() - 1) r.resize(shift + b.size() - 1);
    r = f5_trim(r);
  }
  q = f5_trim(q);
}
F5Poly f5_mod(const F5Poly& a, const F5Poly& b) {
  F5Poly q, r;
  f5_divmod(a, b, q, r);
  return r;
}
// extended euclid: g = s*a + t*b with g constant (a, b coprime)
void f5_bezout(const F5Poly& a, const F5Poly& b, F5Poly& s, F5Poly& t) {
  static constexpr int inv5[5] = {0, 1, 3, 2, 4};
  F5Poly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    F5Poly q, r;
    f5_divmod(r0, r1, q, r);
    F5Poly s2 = f5_sub(s0, f5_mul(q, s1));
    F5Poly t2 = f5_sub(t0, f5_mul(q, t1));
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.size() != 1) throw error("phi20 bezout: factors not coprime mod 5");
  int ginv = inv5[r0[0]];
  for (auto& x : s0) x = (x * ginv) % 5;
  for (auto& x : t0) x = (x * ginv) % 5;
  s = s0;
  t = t0;
}

std::array<RingElement, 9> phi20_poly(const PrecisionContext& ctx) {
  // Phi_20(x) = x^8 - x^6 + x^4 - x^2 + 1
  std::array<RingElement, 9> p{};
  static constexpr std::int64_t cs[9] = {1, 0, -1, 0, 1, 0, -1, 0, 1};
  for (int i = 0; i < 9; ++i) p[static_cast<std::size_t>(i)] = RingElement::from_int(ctx, cs[i]);
  return p;
}

}  // namespace

Phi20Factorization factor_phi20(const PrecisionContext& ctx) {
  const unsigned N = ctx.digits();
  const auto phi = phi20_poly(ctx);

  static constexpr int f1_res[5] = {1, 3, 4, 2, 1};  // (x-2)^4 mod 5
  static constexpr int f2_res[5] = {1, 2, 4, 3, 1};  // (x-3)^4 mod 5
  F5Poly f1r(f1_res, f1_res + 5), f2r(f2_res, f2_res + 5);
  F5Poly ba, bb;
  f5_bezout(f1r, f2r, ba, bb);  // ba*f1 + bb*f2 = 1 mod 5

  Phi20Factorization out;
  for (int i = 0; i < 5; ++i) {
    out.f1[static_cast<std::size_t>(i)] = RingElement::from_int(ctx, f1_res[i]);
    out.f2[static_cast<std::size_t>(i)] = RingElement::from_int(ctx, f2_res[i]);
  }

  RingElement pow5 = RingElement::from_int(ctx, 5);
  for (unsigned k = 1; k < N; ++k) {
    // e = (phi - f1*f2)/5^k mod 5 as an F_5 polynomial of degree <= 7
    std::array<RingElement, 9> prod{};
    for (auto& x : prod) x = RingElement::zero(ctx);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        prod[static_cast<std::size_t>(i + j)] =
            prod[static_cast<std::size_t>(i + j)] +
            out.f1[static_cast<std::size_t>(i)] * out.f2[static_cast<std::size_t>(j)];
    F5Poly e(8, 0);
    bool all_zero = true;
    for (int i = 0; i < 8; ++i) {
      RingElement diff = phi[static_cast<std::size_t>(i)] - prod[static_cast<std::size_t>(i)];
      if (diff.is_zero()) continue;
      const Limbs& raw = diff.coeff(0).a;
      Limbs shifted = ctx.shift_down_pow5(raw, static_cast<int>(k));
      e[static_cast<std::size_t>(i)] = ctx.mod5(shifted);
      if (e[static_cast<std::size_t>(i)] != 0) all_zero = false;
    }
    if (!all_zero) {
      F5Poly d1 = f5_mod(f5_mul(bb, e), f1r);
      F5Poly d2 = f5_mod(f5_mul(ba, e), f2r);
      for (std::size_t i = 0; i < d1.size(); ++i)
        if (d1[i])
          out.f1[i] = out.f1[i] + RingElement::from_int(ctx, d1[i]) * pow5;
      for (std::size_t i = 0; i < d2.size(); ++i)
        if (d2[i])
          out.f2[i] = out.f2[i] + RingElement::from_int(ctx, d2[i]) * pow5;
    }
    pow5 = pow5.scale_int(5);
  }

  // exactness check at working precision
  for (int i = 0; i < 9; ++i) {
    RingElement acc = RingElement::zero(ctx);
    for (int a = 0; a < 5; ++a) {
      int b = i - a;
      if (b < 0 || b > 4) continue;
      acc = acc + out.f1[static_cast<std::size_t>(a)] * out.f2[static_cast<std::size_t>(b)];
    }
    if (!(acc == phi[static_cast<std::size_t>(i)]))
      throw error("factor_phi20: lift did not reach working precision");
  }
  return out;
}

CharacterClass classify(const DirichletCharacter& chi, const Phi20Factorization& fac,
                        const RingBasics& basics) {
  if (chi.modulus != 25 || !chi.odd() || !chi.primitive())
    throw domain_error("classify: character must be odd primitive of conductor 25");
  RingElement x = chi.value(2, basics);
  RingElement v1 = poly_eval(std::span<const RingElement>(fac.f1.data(), 5), x);
  RingElement v2 = poly_eval(std::span<const RingElement>(fac.f2.data(), 5), x);
  const int cap = 4 * static_cast<int>(basics.ctx->digits());
  bool z1 = v1.valuation().q >= cap - kGuardQuarters;
  bool z2 = v2.valuation().q >= cap - kGuardQuarters;
  if (z1 == z2) throw precision_error("classify: annihilating factor undecidable");
  // the complementary factor must evaluate to a unit
  if ((z1 ? v2 : v1).valuation() != QuarterVal(0))
    throw precision_error("classify: non-annihilating factor is not a unit");
  return z1 ? CharacterClass::F1 : CharacterClass::F2;
}

}  // namespace u5s
