#include <doctest.h>

#include "test_helpers.hpp"
#include "u5slopes/golden.hpp"
#include "u5slopes/modforms.hpp"
#include "u5slopes/op_matrix.hpp"
#include "u5slopes/slopes.hpp"

using namespace u5s;

namespace {
PrecisionContext& ctx32() {
  static PrecisionContext ctx(32);
  return ctx;
}
const Workspace& ws12() {
  static Workspace ws = make_workspace(ctx32(), 12);
  return ws;
}
}  // namespace

TEST_CASE("q_to_t round trips") {
  const Workspace& ws = ws12();
  auto& ctx = ctx32();
  // f = T itself
  TPolynomial p = q_to_t(ws.t_pows[1], ws.pows(), 6, true);
  CHECK(p.c[1] == RingElement::one(ctx));
  for (int d = 2; d <= 6; ++d) CHECK(p.c[static_cast<std::size_t>(d)].is_zero());
  CHECK(p.c[0].is_zero());
  // f = T^2 as a series product
  LaurentSeries t2 = ls_mul(ws.t_pows[1], ws.t_pows[1], ws.t_window);
  TPolynomial p2 = q_to_t(t2, ws.pows(), 6, true);
  CHECK(p2.c[2] == RingElement::one(ctx));
  CHECK(p2.c[1].is_zero());
  CHECK(p2.c[3].is_zero());
}

TEST_CASE("column degrees and the paper's first-column tables") {
  const Workspace& ws = ws12();
  // class F2 representative (a=1) and class F1 representative (a=3)
  for (auto [exp, cls] : std::initializer_list<std::pair<int, CharacterClass>>{
           {1, CharacterClass::F2}, {3, CharacterClass::F1}}) {
    ColumnSet cols = build_column_set(ws, {25, exp}, 5);
    const auto& golden = golden_column_quarters(cls);
    for (int j = 1; j <= 5; ++j) {
      TPolynomial col = column(ws, cols, nullptr, j, 5 * j, true);
      CHECK(col.degree == 5 * j);
      for (int i = 1; i <= 5 * j; ++i) {
        QuarterVal v = col.c[static_cast<std::size_t>(i)].valuation();
        CHECK(v.q == golden[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)]);
      }
    }
  }
}

TEST_CASE("U5(T^5) raw valuations and T-congruence") {
  const Workspace& ws = ws12();
  auto& ctx = ctx32();
  // T^5 at the full window, then U5
  LaurentSeries t5full = ws.T;
  for (int i = 1; i < 5; ++i) t5full = ls_mul(t5full, ws.T, ws.window);
  LaurentSeries u5t5 = ls_u5(t5full);
  TPolynomial p = q_to_t(u5t5, ws.pows(), 25, true);
  const auto& raw = golden_u5t5_raw_digits();
  for (int i = 1; i <= 25; ++i)
    CHECK(p.c[static_cast<std::size_t>(i)].valuation().q == 4 * raw[static_cast<std::size_t>(i - 1)]);

  // v(U5(T^5) - T) >= 1 coefficientwise in q
  LaurentSeries diff = ls_sub(u5t5, ws.T);
  for (int e = diff.lead; e < diff.window; ++e) {
    if (diff.coeff_negligible(e)) continue;
    CHECK(diff.at(e).valuation().q >= 4);
  }
  // and the T^1 coefficient is a unit congruent to 1
  CHECK(p.c[1].valuation() == QuarterVal(0));
  CHECK((p.c[1] - RingElement::one(ctx)).valuation().q >= 4);
}

TEST_CASE("matrix assembly invariants") {
  const Workspace& ws = ws12();
  ColumnSet cols = build_column_set(ws, {25, 1}, 12);
  UMatrix m8 = assemble(ws, cols, tau_designated(), 0, 8);
  UMatrix m12 = assemble(ws, cols, tau_designated(), 0, 12);

  // truncation consistency
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) CHECK(m8.at(i, j) == m12.at(i, j));

  // entries above the column degree vanish
  for (int j = 1; j <= 2; ++j)
    for (int i = 5 * j + 1; i <= 12; ++i) CHECK(m12.at(i, j).is_zero());

  // v(det M_1) equals the first class slope
  CHECK(m12.at(1, 1).valuation() == slope_quarters(1, CharacterClass::F2));

  // W view: integrality holds and the characteristic polynomial is unchanged
  UMatrix w8 = to_w_basis(m8);
  auto cp_t = berkowitz_charpoly(m8);
  auto cp_w = berkowitz_charpoly(w8);
  REQUIRE(cp_t.size() == cp_w.size());
  for (std::size_t i = 0; i < cp_t.size(); ++i) CHECK(cp_t[i] == cp_w[i]);
}

TEST_CASE("weight raising multiplies columns by the unit multiplier") {
  const Workspace& ws = ws12();
  ColumnSet cols = build_column_set(ws, {25, 3}, 8);
  UMatrix m0 = assemble(ws, cols, tau_designated(), 0, 8);
  UMatrix m2 = assemble(ws, cols, tau_designated(), 2, 8);
  // the t=2 matrix differs but its first-column head keeps the class valuation
  CHECK(m2.at(1, 1).valuation() == m0.at(1, 1).valuation());
  bool differs = false;
  for (int i = 1; i <= 8 && !differs; ++i)
    if (!(m2.at(i, 1) == m0.at(i, 1))) differs = true;
  CHECK(differs);
}

TEST_CASE("workspace rejects oversized requests") {
  const Workspace& ws = ws12();
  ColumnSet cols = build_column_set(ws, {25, 1}, 3);
  CHECK_THROWS_AS(column(ws, cols, nullptr, 4, 8, false), u5s::domain_error);
  CHECK_THROWS_AS(assemble(ws, cols, tau_designated(), 0, 13), u5s::domain_error);
}
