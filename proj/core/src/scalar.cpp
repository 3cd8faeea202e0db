#include "u5slopes/scalar.hpp"

#include <algorithm>

namespace u5s {

namespace {

int cmp_limbs(const Limbs& a, const Limbs& b, int limbs) {
  for (int i = limbs - 1; i >= 0; --i) {
    if (a.w[i] != b.w[i]) return a.w[i] < b.w[i] ? -1 : 1;
  }
  return 0;
}

// a += b, returns carry
u64 add_limbs(Limbs& a, const Limbs& b, int limbs) {
  u64 carry = 0;
  for (int i = 0; i < limbs; ++i) {
    u128 s = static_cast<u128>(a.w[i]) + b.w[i] + carry;
    a.w[i] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  return carry;
}

// a -= b, returns borrow
u64 sub_limbs(Limbs& a, const Limbs& b, int limbs) {
  u64 borrow = 0;
  for (int i = 0; i < limbs; ++i) {
    u128 s = static_cast<u128>(a.w[i]) - b.w[i] - borrow;
    a.w[i] = static_cast<u64>(s);
    borrow = static_cast<u64>(-(s >> 64)) & 1;
  }
  return borrow;
}

}  // namespace

PrecisionContext::PrecisionContext(unsigned digits) : digits_(digits) {
  if (digits < kMinDigits || digits > kMaxDigits)
    throw domain_error("precision digits must lie in [8, 108]");

  // m = 5^N by repeated times-5 (shift + add)
  m_ = Limbs{};
  m_.w[0] = 1;
  for (unsigned d = 0; d < digits; ++d) {
    Limbs twice = m_;
    add_limbs(twice, m_, kMaxLimbs);
    Limbs four = twice;
    add_limbs(four, twice, kMaxLimbs);
    add_limbs(four, m_, kMaxLimbs);
    m_ = four;
  }
  limbs_ = kMaxLimbs;
  while (limbs_ > 1 && m_.w[limbs_ - 1] == 0) --limbs_;

  // -m^{-1} mod 2^64 by Newton iteration (m odd)
  u64 inv = 1;
  for (int it = 0; it < 6; ++it) inv *= 2 - m_.w[0] * inv;
  m_inv_ = ~inv + 1;

  // R mod m and R^2 mod m by doubling
  Limbs x{};
  x.w[0] = 1;
  for (int bit = 0; bit < 64 * limbs_; ++bit) {
    u64 carry = add_limbs(x, x, limbs_);
    if (carry || cmp_limbs(x, m_, limbs_) >= 0) sub_limbs(x, m_, limbs_);
  }
  one_ = x;
  for (int bit = 0; bit < 64 * limbs_; ++bit) {
    u64 carry = add_limbs(x, x, limbs_);
    if (carry || cmp_limbs(x, m_, limbs_) >= 0) sub_limbs(x, m_, limbs_);
  }
  r2_ = x;
}

bool PrecisionContext::is_zero(const Limbs& a) const {
  for (int i = 0; i < limbs_; ++i)
    if (a.w[i] != 0) return false;
  return true;
}

void PrecisionContext::add(const Limbs& a, const Limbs& b, Limbs& out) const {
  out = a;
  u64 carry = add_limbs(out, b, limbs_);
  if (carry || cmp_limbs(out, m_, limbs_) >= 0) sub_limbs(out, m_, limbs_);
}

void PrecisionContext::sub(const Limbs& a, const Limbs& b, Limbs& out) const {
  out = a;
  u64 borrow = sub_limbs(out, b, limbs_);
  if (borrow) add_limbs(out, m_, limbs_);
}

void PrecisionContext::neg(const Limbs& a, Limbs& out) const {
  if (is_zero(a)) {
    out = Limbs{};
    return;
  }
  out = m_;
  sub_limbs(out, a, limbs_);
}

void PrecisionContext::mul(const Limbs& a, const Limbs& b, Limbs& out) const {
  // CIOS Montgomery multiplication over limbs_ words.
  const int L = limbs_;
  u64 t[kMaxLimbs + 2] = {0, 0, 0, 0, 0, 0};
  for (int i = 0; i < L; ++i) {
    const u64 ai = a.w[i];
    u64 carry = 0;
    for (int j = 0; j < L; ++j) {
      u128 s = static_cast<u128>(ai) * b.w[j] + t[j] + carry;
      t[j] = static_cast<u64>(s);
      carry = static_cast<u64>(s >> 64);
    }
    u128 s = static_cast<u128>(t[L]) + carry;
    t[L] = static_cast<u64>(s);
    t[L + 1] = static_cast<u64>(s >> 64);

    const u64 mf = t[0] * m_inv_;
    u128 s2 = static_cast<u128>(mf) * m_.w[0] + t[0];
    carry = static_cast<u64>(s2 >> 64);
    for (int j = 1; j < L; ++j) {
      u128 s3 = static_cast<u128>(mf) * m_.w[j] + t[j] + carry;
      t[j - 1] = static_cast<u64>(s3);
      carry = static_cast<u64>(s3 >> 64);
    }
    u128 s4 = static_cast<u128>(t[L]) + carry;
    t[L - 1] = static_cast<u64>(s4);
    t[L] = t[L + 1] + static_cast<u64>(s4 >> 64);
    t[L + 1] = 0;
  }
  out = Limbs{};
  for (int i = 0; i < L; ++i) out.w[i] = t[i];
  if (t[L] != 0 || cmp_limbs(out, m_, limbs_) >= 0) sub_limbs(out, m_, limbs_);
}

Limbs PrecisionContext::from_int(std::int64_t v) const {
  bool negative = v < 0;
  u64 mag = negative ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v);
  Limbs raw{};
  if (limbs_ == 1) {
    raw.w[0] = mag % m_.w[0];
  } else if (limbs_ == 2 && m_.w[1] != 0) {
    // modulus fits in 128 bits and exceeds any u64 magnitude
    raw.w[0] = mag;
  } else {
    raw.w[0] = mag;
  }
  // When limbs_ == 1 the reduction above already applied; otherwise mag < m.
  Limbs mont;
  mul(raw, r2_, mont);
  if (negative) {
    Limbs n;
    neg(mont, n);
    return n;
  }
  return mont;
}

Limbs PrecisionContext::canonical(const Limbs& a) const {
  Limbs one_raw{};
  one_raw.w[0] = 1;
  Limbs out;
  mul(a, one_raw, out);
  return out;
}

u64 PrecisionContext::div5_inplace(Limbs& a, int limbs) {
  u128 rem = 0;
  for (int i = limbs - 1; i >= 0; --i) {
    u128 cur = (rem << 64) | a.w[i];
    a.w[i] = static_cast<u64>(cur / 5);
    rem = cur % 5;
  }
  return static_cast<u64>(rem);
}

int PrecisionContext::v5(const Limbs& a) const {
  if (is_zero(a)) return static_cast<int>(digits_);
  Limbs x = a;
  int v = 0;
  for (;;) {
    Limbs trial = x;
    if (div5_inplace(trial, limbs_) != 0) return v;
    x = trial;
    ++v;
  }
}

Limbs PrecisionContext::shift_down_pow5(const Limbs& a, int k) const {
  Limbs x = a;
  for (int i = 0; i < k; ++i) {
    if (div5_inplace(x, limbs_) != 0)
      throw valuation_error("exact shift: representative not divisible by 5");
  }
  return x;
}

int PrecisionContext::mod5(const Limbs& a) const {
  u128 rem = 0;
  for (int i = limbs_ - 1; i >= 0; --i) rem = ((rem << 64) | a.w[i]) % 5;
  return static_cast<int>(rem);
}

std::string PrecisionContext::decimal(const Limbs& a) const {
  Limbs x = canonical(a);
  if (is_zero(x)) return "0";
  std::string out;
  while (!is_zero(x)) {
    u128 rem = 0;
    for (int i = limbs_ - 1; i >= 0; --i) {
      u128 cur = (rem << 64) | x.w[i];
      x.w[i] = static_cast<u64>(cur / 10);
      rem = cur % 10;
    }
    out.push_back(static_cast<char>('0' + static_cast<int>(rem)));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace u5s
