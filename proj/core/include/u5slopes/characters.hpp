#pragma once

#include <array>
#include <string>
#include <vector>

#include "u5slopes/ring.hpp"

namespace u5s {

enum class CharacterClass { F1, F2 };

inline const char* class_name(CharacterClass c) { return c == CharacterClass::F1 ? "f1" : "f2"; }

// Dirichlet character mod 5 or 25, stored by its exponent on the generator 2:
// chi(2) = zeta_ord^exponent with ord = 4 (mod 5) or 20 (mod 25).
struct DirichletCharacter {
  int modulus = 25;  // 5 or 25
  int exponent = 1;  // mod 4 resp. mod 20

  int order_of_group() const { return modulus == 5 ? 4 : 20; }
  bool odd() const { return exponent % 2 != 0; }
  // conductor equals the modulus (mod 25: exponent not divisible by 5;
  // mod 5: exponent nonzero)
  bool primitive() const { return modulus == 5 ? exponent % 4 != 0 : exponent % 5 != 0; }
  std::string name() const { return "a=" + std::to_string(exponent); }

  RingElement value(std::int64_t n, const RingBasics& basics) const;
};

// Discrete log of n in (Z/25)^x base 2; -1 for multiples of 5.
int dlog25(int n);
int dlog5(int n);

// The 8 characters with exponent in {1,3,7,9,11,13,17,19}.
std::vector<DirichletCharacter> enumerate_odd_primitive_25();

// Conductor-5 characters: the designated tau has tau(2) = I (exponent 1); the
// other odd choice is its conjugate tau(2) = -I (exponent 3).
DirichletCharacter tau_designated();
DirichletCharacter tau_conjugate();

// chi * tau^t as a character mod 25 (tau lifted through reduction mod 5).
DirichletCharacter char_product(const DirichletCharacter& chi25, const DirichletCharacter& tau5,
                                int t);

// Monic quartic factors of Phi_20 over the ring, coefficients constant-first.
struct Phi20Factorization {
  std::array<RingElement, 5> f1;  // = x^4+2x^3+4x^2+3x+1 mod 5
  std::array<RingElement, 5> f2;  // = x^4+3x^3+4x^2+2x+1 mod 5
};

// Quadratic-free linear Hensel lift of the coprime mod-5 factorization,
// one 5-adic digit per step.
Phi20Factorization factor_phi20(const PrecisionContext& ctx);

// F1 iff the lifted f1 annihilates chi(2). Requires chi odd primitive mod 25.
CharacterClass classify(const DirichletCharacter& chi, const Phi20Factorization& fac,
                        const RingBasics& basics);

}  // namespace u5s
