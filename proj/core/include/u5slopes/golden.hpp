#pragma once

#include <array>
#include <vector>

#include "u5slopes/characters.hpp"
#include "u5slopes/quarter.hpp"

namespace u5s {

// Reference valuation tables for the first five matrix columns
// U_5(T^j * E*_{1,chi}/V(E*_{1,chi})), j = 1..5, per character class, in
// quarter units. Class F2 (f2 annihilates chi(2)) carries the lists starting
// [1/4, ...], class F1 the lists starting [1/2, ...].
const std::vector<std::vector<int>>& golden_column_quarters(CharacterClass cls);

// Reference list for U_5(T^5): the published table is the raw 5-adic
// coefficient valuation divided by 4; both forms are exposed.
const std::array<int, 25>& golden_u5t5_raw_digits();      // v_5 values (integers)
std::array<int, 25> golden_u5t5_published_quarters();     // published = raw/4

// Structural congruence patterns: rows attaining the minimal sqrt5-scaled
// valuation in columns 1..5, and for U_5(T^5).
const std::array<std::vector<int>, 5>& golden_congruence_patterns();
const std::vector<int>& golden_u5t5_pattern();

}  // namespace u5s
