#include "u5slopes/golden.hpp"

namespace u5s {

const std::vector<std::vector<int>>& golden_column_quarters(CharacterClass cls) {
  // quarters (v(5) = 4)
  static const std::vector<std::vector<int>> f2 = {
      {1, 5, 8, 12, 16},
      {1, 3, 7, 10, 16, 17, 21, 24, 28, 32},
      {0, 3, 4, 8, 12, 17, 19, 23, 26, 32, 33, 37, 40, 44, 48},
      {0, 2, 4, 6, 12, 13, 17, 20, 24, 28, 34, 35, 39, 42, 48, 49, 53, 56, 60, 64},
      {0, 4, 4, 8, 8, 14, 15, 19, 22, 28, 29, 33, 37, 41, 44, 49, 51, 55, 58, 64,
       65, 69, 72, 76, 80},
  };
  static const std::vector<std::vector<int>> f1 = {
      {2, 6, 9, 13, 16},
      {2, 4, 8, 11, 16, 18, 22, 25, 29, 32},
      {1, 4, 5, 9, 12, 20, 20, 24, 27, 32, 34, 38, 41, 45, 48},
      {1, 3, 5, 7, 12, 14, 18, 21, 25, 28, 34, 36, 40, 43, 48, 50, 54, 57, 61, 64},
      {0, 4, 4, 8, 8, 14, 16, 20, 23, 28, 30, 34, 38, 42, 44, 50, 52, 56, 59, 64,
       66, 70, 73, 77, 80},
  };
  return cls == CharacterClass::F1 ? f1 : f2;
}

const std::array<int, 25>& golden_u5t5_raw_digits() {
  static const std::array<int, 25> raw = {0,  1,  1,  2,  2,  5,  6,  6,  7,  7,  10, 10, 10,
                                          11, 11, 14, 16, 15, 16, 16, 18, 19, 19, 20, 19};
  return raw;
}

std::array<int, 25> golden_u5t5_published_quarters() {
  // the published list equals the raw v_5 values divided by 4; in quarter
  // units that is exactly the raw digit value
  std::array<int, 25> out{};
  const auto& raw = golden_u5t5_raw_digits();
  for (std::size_t i = 0; i < raw.size(); ++i) out[i] = raw[i];
  return out;
}

const std::array<std::vector<int>, 5>& golden_congruence_patterns() {
  static const std::array<std::vector<int>, 5> pats = {
      std::vector<int>{1}, {1, 2}, {1, 3}, {1, 2, 3, 4}, {1, 3, 5}};
  return pats;
}

const std::vector<int>& golden_u5t5_pattern() {
  static const std::vector<int> pat = {1, 3, 5};
  return pat;
}

}  // namespace u5s
