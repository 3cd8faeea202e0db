#include "u5slopes/ring.hpp"

#include <sstream>

#include "u5slopes/errors.hpp"

namespace u5s {

F25 f25_add(F25 x, F25 y) {
  return {static_cast<std::uint8_t>((x.a + y.a) % 5), static_cast<std::uint8_t>((x.b + y.b) % 5)};
}
F25 f25_sub(F25 x, F25 y) {
  return {static_cast<std::uint8_t>((x.a + 5 - y.a) % 5),
          static_cast<std::uint8_t>((x.b + 5 - y.b) % 5)};
}
F25 f25_mul(F25 x, F25 y) {
  return {static_cast<std::uint8_t>((x.a * y.a + 3 * x.b * y.b) % 5),
          static_cast<std::uint8_t>((x.a * y.b + x.b * y.a) % 5)};
}
F25 f25_inv(F25 x) {
  if (x.is_zero()) throw domain_error("F25 inverse of zero");
  // norm = a^2 - 3 b^2 in F_5; (a + bs)^{-1} = (a - bs)/norm
  int norm = ((x.a * x.a + 10 - 3 * x.b * x.b) % 5 + 5) % 5;
  static constexpr int inv5[5] = {0, 1, 3, 2, 4};
  int ninv = inv5[norm];
  return {static_cast<std::uint8_t>((x.a * ninv) % 5),
          static_cast<std::uint8_t>(((5 - x.b) % 5) * ninv % 5)};
}

namespace {

Unramified u_add(const PrecisionContext& C, const Unramified& x, const Unramified& y) {
  Unramified out;
  C.add(x.a, y.a, out.a);
  C.add(x.b, y.b, out.b);
  return out;
}
Unramified u_sub(const PrecisionContext& C, const Unramified& x, const Unramified& y) {
  Unramified out;
  C.sub(x.a, y.a, out.a);
  C.sub(x.b, y.b, out.b);
  return out;
}
Unramified u_neg(const PrecisionContext& C, const Unramified& x) {
  Unramified out;
  C.neg(x.a, out.a);
  C.neg(x.b, out.b);
  return out;
}
// (a + bs)(c + ds) = (ac + 3bd) + (ad + bc)s
Unramified u_mul(const PrecisionContext& C, const Unramified& x, const Unramified& y) {
  Limbs ac, bd, ad, bc;
  C.mul(x.a, y.a, ac);
  C.mul(x.b, y.b, bd);
  C.mul(x.a, y.b, ad);
  C.mul(x.b, y.a, bc);
  Limbs bd3;
  C.add(bd, bd, bd3);
  C.add(bd3, bd, bd3);
  Unramified out;
  C.add(ac, bd3, out.a);
  C.add(ad, bc, out.b);
  return out;
}
Unramified u_times5(const PrecisionContext& C, const Unramified& x) {
  Unramified t = u_add(C, x, x);
  t = u_add(C, t, t);
  return u_add(C, t, x);
}
bool u_zero(const PrecisionContext& C, const Unramified& x) {
  return C.is_zero(x.a) && C.is_zero(x.b);
}

}  // namespace

RingElement RingElement::one(const PrecisionContext& ctx) {
  RingElement r(ctx);
  r.c_[0].a = ctx.one();
  return r;
}

RingElement RingElement::from_int(const PrecisionContext& ctx, std::int64_t v) {
  RingElement r(ctx);
  r.c_[0].a = ctx.from_int(v);
  return r;
}

RingElement RingElement::pi(const PrecisionContext& ctx) {
  RingElement r(ctx);
  r.c_[1].a = ctx.one();
  return r;
}

RingElement RingElement::from_residue(const PrecisionContext& ctx, F25 r) {
  RingElement x(ctx);
  x.c_[0].a = ctx.from_int(r.a);
  x.c_[0].b = ctx.from_int(r.b);
  return x;
}

bool RingElement::is_zero() const {
  for (const auto& u : c_)
    if (!u_zero(*ctx_, u)) return false;
  return true;
}

bool operator==(const RingElement& x, const RingElement& y) {
  check_same_context(x.ctx_, y.ctx_);
  return x.c_ == y.c_;
}

RingElement operator+(const RingElement& x, const RingElement& y) {
  check_same_context(x.ctx_, y.ctx_);
  RingElement out(*x.ctx_);
  for (int i = 0; i < 4; ++i) out.c_[i] = u_add(*x.ctx_, x.c_[i], y.c_[i]);
  return out;
}

RingElement operator-(const RingElement& x, const RingElement& y) {
  check_same_context(x.ctx_, y.ctx_);
  RingElement out(*x.ctx_);
  for (int i = 0; i < 4; ++i) out.c_[i] = u_sub(*x.ctx_, x.c_[i], y.c_[i]);
  return out;
}

RingElement operator-(const RingElement& x) {
  RingElement out(*x.ctx_);
  for (int i = 0; i < 4; ++i) out.c_[i] = u_neg(*x.ctx_, x.c_[i]);
  return out;
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  check_same_context(x.ctx_, y.ctx_);
  const PrecisionContext& C = *x.ctx_;
  Unramified t[7]{};
  for (int i = 0; i < 4; ++i) {
    if (u_zero(C, x.c_[i])) continue;
    for (int j = 0; j < 4; ++j) {
      if (u_zero(C, y.c_[j])) continue;
      t[i + j] = u_add(C, t[i + j], u_mul(C, x.c_[i], y.c_[j]));
    }
  }
  RingElement out(C);
  for (int k = 0; k < 4; ++k) out.c_[k] = t[k];
  for (int k = 4; k < 7; ++k) {
    if (u_zero(C, t[k])) continue;
    out.c_[k - 4] = u_add(C, out.c_[k - 4], u_times5(C, t[k]));  // pi^4 = 5
  }
  return out;
}

RingElement RingElement::mul_pi() const {
  const PrecisionContext& C = *ctx_;
  RingElement out(C);
  out.c_[0] = u_times5(C, c_[3]);
  out.c_[1] = c_[0];
  out.c_[2] = c_[1];
  out.c_[3] = c_[2];
  return out;
}

RingElement RingElement::mul_pi_pow(int e) const {
  RingElement out = *this;
  for (int i = 0; i < e; ++i) out = out.mul_pi();
  return out;
}

RingElement RingElement::scale_int(std::int64_t k) const {
  return *this * RingElement::from_int(*ctx_, k);
}

RingElement RingElement::pow(std::uint64_t e) const {
  RingElement r = RingElement::one(*ctx_);
  RingElement b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

QuarterVal RingElement::valuation() const {
  const PrecisionContext& C = *ctx_;
  const int N = static_cast<int>(C.digits());
  std::int64_t best = QuarterVal::kInf;
  for (int m = 0; m < 4; ++m) {
    int va = C.v5(c_[m].a);
    int vb = C.v5(c_[m].b);
    int v = va < vb ? va : vb;
    if (v < N) best = std::min<std::int64_t>(best, 4 * static_cast<std::int64_t>(v) + m);
  }
  if (best >= 4 * static_cast<std::int64_t>(N)) return QuarterVal::infinite();
  return QuarterVal(best);
}

F25 RingElement::residue() const {
  const PrecisionContext& C = *ctx_;
  return {static_cast<std::uint8_t>(C.mod5(c_[0].a)), static_cast<std::uint8_t>(C.mod5(c_[0].b))};
}

RingElement RingElement::shift_right_exact(int w) const {
  const PrecisionContext& C = *ctx_;
  RingElement x = *this;
  for (int step = 0; step < w; ++step) {
    RingElement y(C);
    y.c_[0] = x.c_[1];
    y.c_[1] = x.c_[2];
    y.c_[2] = x.c_[3];
    y.c_[3].a = C.shift_down_pow5(x.c_[0].a, 1);
    y.c_[3].b = C.shift_down_pow5(x.c_[0].b, 1);
    x = y;
  }
  return x;
}

std::string RingElement::str() const {
  const PrecisionContext& C = *ctx_;
  static const char* mono[4] = {"", "*pi", "*pi^2", "*pi^3"};
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m < 4; ++m) {
    if (u_zero(C, c_[m])) continue;
    if (!first) os << " + ";
    os << "(" << C.decimal(c_[m].a);
    if (!C.is_zero(c_[m].b)) os << " + " << C.decimal(c_[m].b) << "*s";
    os << ")" << mono[m];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

RingElement invert_unit(const RingElement& x) {
  if (x.valuation() != QuarterVal(0)) throw valuation_error("invert_unit: input is not a unit");
  const PrecisionContext& C = x.context();
  RingElement y = RingElement::from_residue(C, f25_inv(x.residue()));
  RingElement two = RingElement::from_int(C, 2);
  // Newton doubles pi-adic precision each step; 10 steps cover 4*108 digits.
  for (int it = 0; it < 10; ++it) y = y * (two - x * y);
  if (!(x * y == RingElement::one(C))) throw valuation_error("invert_unit: iteration failed");
  return y;
}

RingElement teichmuller(const PrecisionContext& ctx, F25 r) {
  if (r.is_zero()) throw domain_error("teichmuller: zero residue");
  RingElement x = RingElement::from_residue(ctx, r);
  for (unsigned it = 0; it < ctx.digits() + 4; ++it) {
    RingElement nx = x.pow(25);
    if (nx == x) return x;
    x = nx;
  }
  throw error("teichmuller: no fixpoint reached");
}

RingElement poly_eval(std::span<const RingElement> poly, const RingElement& x) {
  RingElement acc = RingElement::zero(x.context());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RingElement hensel_root(std::span<const RingElement> poly, F25 seed) {
  if (poly.empty()) throw domain_error("hensel_root: empty polynomial");
  const PrecisionContext& C = poly[0].context();
  std::vector<RingElement> deriv;
  for (std::size_t i = 1; i < poly.size(); ++i)
    deriv.push_back(poly[i].scale_int(static_cast<std::int64_t>(i)));

  RingElement x = RingElement::from_residue(C, seed);
  if (!poly_eval(poly, x).residue().is_zero())
    throw hensel_error("hensel_root: seed is not a root mod pi");
  if (poly_eval(deriv, x).residue().is_zero())
    throw hensel_error("hensel_root: seed is not a simple root");

  for (int it = 0; it < 12; ++it) {
    RingElement fx = poly_eval(poly, x);
    if (fx.is_zero()) break;
    x = x - fx * invert_unit(poly_eval(deriv, x));
  }
  if (!poly_eval(poly, x).is_zero()) throw hensel_error("hensel_root: did not converge");
  return x;
}

RingElement build_I(const PrecisionContext& ctx) {
  RingElement I = teichmuller(ctx, F25{3, 0});
  if (!(I * I == -RingElement::one(ctx))) throw error("build_I: I^2 != -1");
  if ((RingElement::from_int(ctx, 2) + I).valuation() != QuarterVal(4))
    throw error("build_I: v(2+I) != 1");
  return I;
}

RingElement build_zeta5(const PrecisionContext& ctx) {
  // zeta_5 = 1 + pi*t; Eisenstein relation reduces to
  // t^4 + pi^3 t^3 + 2 pi^2 t^2 + 2 pi t + 1 = 0, residue t^4 = -1, seed t = s.
  RingElement one = RingElement::one(ctx);
  RingElement piel = RingElement::pi(ctx);
  RingElement pi2 = piel * piel;
  RingElement pi3 = pi2 * piel;
  std::array<RingElement, 5> f = {one, piel.scale_int(2), pi2.scale_int(2), pi3, one};
  RingElement t = hensel_root(std::span<const RingElement>(f.data(), f.size()), F25{0, 1});
  RingElement z = one + piel * t;
  if (!(z.pow(5) == one) || z == one) throw error("build_zeta5: not a primitive 5th root");
  if ((z - one).valuation() != QuarterVal(1)) throw error("build_zeta5: v(zeta5 - 1) != 1/4");
  return z;
}

RingElement build_zeta20(const PrecisionContext& ctx) {
  return build_I(ctx) * build_zeta5(ctx);
}

RingBasics RingBasics::make(const PrecisionContext& ctx) {
  RingBasics b{&ctx, build_I(ctx), build_zeta5(ctx), RingElement(), {}};
  b.zeta20 = b.I * b.zeta5;
  b.zeta20_pow[0] = RingElement::one(ctx);
  for (int k = 1; k < 20; ++k) b.zeta20_pow[k] = b.zeta20_pow[k - 1] * b.zeta20;
  return b;
}

}  // namespace u5s
