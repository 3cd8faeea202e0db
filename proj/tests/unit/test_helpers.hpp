#pragma once

#include <cstdint>
#include <vector>

#include "u5slopes/ring.hpp"
#include "u5slopes/series.hpp"

namespace u5s::test {

// deterministic rng for property tests
struct SplitMix {
  std::uint64_t s;
  explicit SplitMix(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::int64_t small(std::int64_t bound) { return static_cast<std::int64_t>(next() % bound); }
};

inline RingElement random_element(const PrecisionContext& ctx, SplitMix& rng) {
  RingElement x = RingElement::zero(ctx);
  for (int m = 0; m < 4; ++m) {
    x = x + RingElement::from_int(ctx, static_cast<std::int64_t>(rng.next() >> 16)).mul_pi_pow(m);
    RingElement s = RingElement::from_residue(ctx, F25{0, 1});
    x = x + (s * RingElement::from_int(ctx, static_cast<std::int64_t>(rng.next() >> 16))).mul_pi_pow(m);
  }
  return x;
}

inline RingElement random_unit(const PrecisionContext& ctx, SplitMix& rng) {
  for (;;) {
    RingElement x = random_element(ctx, rng);
    if (x.valuation() == QuarterVal(0)) return x;
  }
}

inline LaurentSeries random_series(const PrecisionContext& ctx, SplitMix& rng, int lead,
                                   int window) {
  LaurentSeries f = LaurentSeries::make(ctx, lead, window);
  for (int e = lead; e < window; ++e) f.at(e) = random_element(ctx, rng);
  return f;
}

// partition numbers by the pentagonal recurrence (independent oracle)
inline std::vector<std::int64_t> partition_numbers(int count) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(count), 0);
  p[0] = 1;
  for (int n = 1; n < count; ++n) {
    std::int64_t acc = 0;
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      std::int64_t sgn = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) acc += sgn * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) acc += sgn * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

}  // namespace u5s::test
