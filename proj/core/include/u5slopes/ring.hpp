#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "u5slopes/quarter.hpp"
#include "u5slopes/scalar.hpp"

namespace u5s {

// Residue field F_25 = F_5(s), s^2 = 3.
struct F25 {
  std::uint8_t a = 0, b = 0;  // a + b*s
  friend bool operator==(const F25&, const F25&) = default;
  bool is_zero() const { return a == 0 && b == 0; }
};

F25 f25_add(F25 x, F25 y);
F25 f25_sub(F25 x, F25 y);
F25 f25_mul(F25 x, F25 y);
F25 f25_inv(F25 x);  // throws domain_error on zero

// a + b*s with s^2 = 3, components mod 5^N.
struct Unramified {
  Limbs a, b;
  friend bool operator==(const Unramified&, const Unramified&) = default;
};

// Element of R = Z_5[s, pi] / (s^2 - 3, pi^4 - 5): c0 + c1*pi + c2*pi^2 + c3*pi^3.
// Immutable value semantics; all operations are exact mod pi^(4N).
class RingElement {
 public:
  RingElement() : ctx_(nullptr) {}
  explicit RingElement(const PrecisionContext& ctx) : ctx_(&ctx) {}

  static RingElement zero(const PrecisionContext& ctx) { return RingElement(ctx); }
  static RingElement one(const PrecisionContext& ctx);
  static RingElement from_int(const PrecisionContext& ctx, std::int64_t v);
  static RingElement pi(const PrecisionContext& ctx);
  static RingElement from_residue(const PrecisionContext& ctx, F25 r);

  const PrecisionContext& context() const { return *ctx_; }
  const PrecisionContext* context_ptr() const { return ctx_; }
  const Unramified& coeff(int i) const { return c_[i]; }
  Unramified& coeff(int i) { return c_[i]; }

  bool is_zero() const;
  friend bool operator==(const RingElement&, const RingElement&);
  friend bool operator!=(const RingElement& x, const RingElement& y) { return !(x == y); }

  friend RingElement operator+(const RingElement& x, const RingElement& y);
  friend RingElement operator-(const RingElement& x, const RingElement& y);
  friend RingElement operator-(const RingElement& x);
  friend RingElement operator*(const RingElement& x, const RingElement& y);

  RingElement mul_pi() const;               // x * pi
  RingElement mul_pi_pow(int e) const;      // x * pi^e, e >= 0
  RingElement scale_int(std::int64_t k) const;
  RingElement pow(std::uint64_t e) const;

  // min over monomials of 4*v5(coeff) + m; INFINITE iff zero at precision
  QuarterVal valuation() const;
  F25 residue() const;  // image in R/(pi) = F_25

  // Exact division by pi^w; requires valuation >= w quarters. Representative
  // shift: the top digits are zero-filled, callers track the watermark.
  RingElement shift_right_exact(int w) const;

  std::string str() const;  // "c0 + c1*pi + ..." with decimal components

 private:
  const PrecisionContext* ctx_;
  std::array<Unramified, 4> c_{};
};

// Multiplicative inverse of a unit (valuation 0), via residue-field inverse
// lifted by Newton iteration. Throws valuation_error on non-units.
RingElement invert_unit(const RingElement& x);

// Teichmuller lift: the unique 24th root of unity congruent to r mod pi,
// computed by iterating x -> x^25 to a fixpoint. r must be nonzero.
RingElement teichmuller(const PrecisionContext& ctx, F25 r);

// Simple-root Hensel lift: poly given by coefficients (constant first) over R.
// Requires poly(seed) = 0 mod pi and poly'(seed) a unit mod pi.
RingElement hensel_root(std::span<const RingElement> poly, F25 seed);

RingElement poly_eval(std::span<const RingElement> poly, const RingElement& x);

// I = Teichmuller lift of 3: I^2 = -1 and v(2+I) = 1 (this pins the choice).
RingElement build_I(const PrecisionContext& ctx);
// zeta_5 = 1 + pi*t with t the Hensel root of t^4 + pi^3 t^3 + 2 pi^2 t^2 + 2 pi t + 1
// seeded at t = s; zeta_5^5 = 1, v(zeta_5 - 1) = 1/4.
RingElement build_zeta5(const PrecisionContext& ctx);
// zeta_20 = I * zeta_5, a primitive 20th root of unity.
RingElement build_zeta20(const PrecisionContext& ctx);

// Per-context bundle of the embedding constants.
struct RingBasics {
  const PrecisionContext* ctx;
  RingElement I, zeta5, zeta20;
  std::array<RingElement, 20> zeta20_pow;

  static RingBasics make(const PrecisionContext& ctx);
};

}  // namespace u5s
