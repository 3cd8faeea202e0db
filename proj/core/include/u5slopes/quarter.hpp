#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace u5s {

// Guard band (in quarters) against the effective-precision watermark: values
// this close to the cap are treated as undecidable.
inline constexpr int kGuardQuarters = 2;

// Valuation normalized so v(5) = 1, stored in quarter units: v(pi) = 1 quarter,
// v(5) = 4 quarters. INFINITE means zero at working precision.
struct QuarterVal {
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  std::int64_t q = kInf;

  constexpr QuarterVal() = default;
  constexpr explicit QuarterVal(std::int64_t quarters) : q(quarters) {}
  static constexpr QuarterVal infinite() { return QuarterVal(kInf); }

  constexpr bool is_infinite() const { return q >= kInf; }

  friend constexpr bool operator==(QuarterVal a, QuarterVal b) { return a.q == b.q; }
  friend constexpr bool operator!=(QuarterVal a, QuarterVal b) { return a.q != b.q; }
  friend constexpr bool operator<(QuarterVal a, QuarterVal b) { return a.q < b.q; }
  friend constexpr bool operator<=(QuarterVal a, QuarterVal b) { return a.q <= b.q; }
  friend constexpr bool operator>(QuarterVal a, QuarterVal b) { return a.q > b.q; }
  friend constexpr bool operator>=(QuarterVal a, QuarterVal b) { return a.q >= b.q; }

  friend constexpr QuarterVal operator+(QuarterVal a, QuarterVal b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return QuarterVal(a.q + b.q);
  }

  // Reduced "p/q" form with denominator dividing 4; "oo" if infinite.
  std::string str() const {
    if (is_infinite()) return "oo";
    std::int64_t num = q, den = 4;
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = den;
    num /= g;
    den /= g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Exact rational, reduced with positive denominator. Used for Newton-polygon
// slopes (denominators divide 4 in this project but segments divide freely).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }
  static Rational from_quarters(std::int64_t q) { return Rational(q, 4); }

  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace u5s
