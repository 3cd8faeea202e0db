#pragma once

#include <optional>
#include <string>
#include <vector>

#include "u5slopes/characters.hpp"
#include "u5slopes/quarter.hpp"

namespace u5s {

struct DimResult {
  bool integral = false;
  std::int64_t d = 0;
  std::string diagnostic;  // set when the character term is not a rational integer
};

// dim S_k(Gamma_0(25), theta) = (5k-7)/2 + eps*(theta(8)+theta(17)) with
// eps = 0 (k odd), -1/4 (k = 2 mod 4), 1/4 (k = 0 mod 4). For even k the
// character term is evaluated in the ring and the result is accepted only if
// it reduces to a rational integer; otherwise the diagnostic is returned.
DimResult cohen_oesterle_dim(int k, const DirichletCharacter& theta, const RingBasics& basics);

struct ClassicalSlopeList {
  int k = 0;
  std::string char_name;
  CharacterClass cls = CharacterClass::F2;
  std::int64_t d = 0;
  std::vector<Rational> slopes;
};

// First d slopes of the class formula, with d the classical dimension of
// S_k(Gamma_0(25), chi*tau^(k-1)); asserts s(d) <= k-1 <= s(d+1).
ClassicalSlopeList classical_slope_list(int k, const DirichletCharacter& chi,
                                        const RingBasics& basics, const Phi20Factorization& fac);

}  // namespace u5s
