#pragma once

#include <string>
#include <vector>

#include "u5slopes/golden.hpp"
#include "u5slopes/op_matrix.hpp"
#include "u5slopes/quarter.hpp"

namespace u5s {

struct ValTableEntry {
  int j = 0;  // 1..5, or 0 for the U_5(T^5) list
  std::vector<QuarterVal> computed;
  std::vector<int> golden_quarters;
  bool uniform_offset = false;
  int delta_quarters = 0;
  bool match = false;  // uniform offset and delta == 0
};

struct ValTableReport {
  CharacterClass cls = CharacterClass::F2;
  std::string char_name;
  std::vector<ValTableEntry> entries;
  bool pass = false;
};

// Computes the valuation lists of the first five matrix columns for chi plus
// the U_5(T^5) list and compares against the golden copies. The U_5(T^5)
// golden list is published in quarter scale (raw v5 / 4); the comparison is
// raw v5 against 4x the published value.
ValTableReport build_valtable(const Workspace& ws, const DirichletCharacter& chi);

struct ClassifyRow {
  int exponent = 0;
  const char* annihilating_factor = "";
  const char* slope_class = "";
  bool coherent = false;
};

struct ClassifyReport {
  std::vector<ClassifyRow> rows;
  int coherent_count = 0;
  bool pass = false;
};

// Correlation of the annihilating Phi_20 factor of chi(2) with the computed
// slope sequence (first certified slope decides the class empirically).
ClassifyReport build_classify_report(int n, unsigned digits);

struct T5CongruenceReport {
  bool pass = false;
  QuarterVal min_val = QuarterVal::infinite();  // over q-coefficients of U5(T^5) - T
};

// v(U_5(T^5) - T) >= 1 coefficientwise in q through the window.
T5CongruenceReport verify_t5_congruence(const PrecisionContext& ctx, int window);

struct CongruencePatternReport {
  // per column j = 1..5: rows attaining the minimal sqrt5-scaled valuation,
  // the minimum itself, and agreement with the reference patterns
  std::vector<std::vector<int>> min_rows;
  std::vector<QuarterVal> min_vals;
  std::vector<int> u5t5_min_rows;
  bool pass = false;
};

// Structural form of the congruence tables: unit positions {1},{1,2},{1,3},
// {1,2,3,4},{1,3,5} at minimal valuation, and {1,3,5} for U_5(T^5).
CongruencePatternReport verify_congruence_patterns(const Workspace& ws,
                                                   const DirichletCharacter& chi);

}  // namespace u5s
