#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "u5slopes/errors.hpp"

namespace u5s {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr int kMaxLimbs = 4;  // 5^N fits for N <= 108

// Little-endian fixed-width residue mod 5^N.
struct Limbs {
  std::array<u64, kMaxLimbs> w{};
  friend bool operator==(const Limbs&, const Limbs&) = default;
};

// One computation runs under a single context: every scalar is a residue mod
// 5^N kept in Montgomery form x*R mod 5^N with R = 2^(64*limbs). R = 1 mod 5,
// so 5-adic valuations and mod-5 residues can be read off the representation.
//
// Division by 5 (or pi) is not part of this layer's arithmetic; the one
// representative-level shift primitive lives in ring.hpp and is reserved for
// the series normalization machinery that carries explicit exponents.
class PrecisionContext {
 public:
  static constexpr unsigned kMinDigits = 8;
  static constexpr unsigned kMaxDigits = 108;

  explicit PrecisionContext(unsigned digits);

  unsigned digits() const { return digits_; }
  int limbs() const { return limbs_; }
  const Limbs& modulus() const { return m_; }

  bool is_zero(const Limbs& a) const;
  void add(const Limbs& a, const Limbs& b, Limbs& out) const;
  void sub(const Limbs& a, const Limbs& b, Limbs& out) const;
  void neg(const Limbs& a, Limbs& out) const;
  void mul(const Limbs& a, const Limbs& b, Limbs& out) const;

  Limbs zero() const { return Limbs{}; }
  Limbs one() const { return one_; }
  Limbs from_int(std::int64_t v) const;   // into Montgomery form
  Limbs canonical(const Limbs& a) const;  // out of Montgomery form

  // 5-adic valuation of the residue; returns digits() when a == 0.
  int v5(const Limbs& a) const;
  // Exact division of the representative by 5^k; requires v5 >= k. The top k
  // digits of the result are zero-filled (the caller tracks lost precision).
  Limbs shift_down_pow5(const Limbs& a, int k) const;
  // Canonical residue mod 5 (valid on the Montgomery form since R = 1 mod 5).
  int mod5(const Limbs& a) const;

  std::string decimal(const Limbs& a) const;  // canonical residue, base 10

 private:
  void reduce_once(Limbs& t, bool force_check) const;
  static u64 div5_inplace(Limbs& a, int limbs);  // returns remainder

  unsigned digits_;
  int limbs_;
  Limbs m_;
  Limbs one_;  // R mod m
  Limbs r2_;   // R^2 mod m
  u64 m_inv_;  // -m^{-1} mod 2^64
};

inline void check_same_context(const PrecisionContext* a, const PrecisionContext* b) {
  if (a != b) throw context_error("operands belong to different precision contexts");
}

}  // namespace u5s
