#pragma once

#include <optional>

#include "u5slopes/op_matrix.hpp"
#include "u5slopes/quarter.hpp"

namespace u5s {

// Slope of the i-th cuspidal eigenform by character class. The assignment is
// pinned by the computed determinant valuations: f1-annihilated characters
// carry floor((8i+4)/5)/4, f2-annihilated ones floor(8i/5)/4.
QuarterVal slope_quarters(int i, CharacterClass cls);
Rational slope_formula(int i, CharacterClass cls);

// Coefficients c_0..c_n of det(1 - X*M) via the Berkowitz division-free
// recurrence; optionally collects det(M_m) of every leading block.
std::vector<RingElement> berkowitz_charpoly(const UMatrix& M,
                                            std::vector<RingElement>* leading_minors = nullptr);

struct NewtonPoint {
  int m = 0;
  QuarterVal v;
};

struct NewtonPolygon {
  std::vector<NewtonPoint> points;    // finite-valuation points below the watermark
  std::vector<NewtonPoint> vertices;  // lower convex hull
  std::vector<Rational> slopes;       // hull slopes with multiplicity, non-decreasing
};

// Lower convex hull of (m, v(c_m)). Coefficients at or above prec_quarters -
// guard are treated as not visible. c_0 must be a unit.
NewtonPolygon newton_slopes(const std::vector<RingElement>& coeffs, int prec_quarters);

struct SlopeRunParams {
  int char_exponent = 1;
  int tau_exponent = 1;
  int t = 0;
  int n = 30;
  unsigned digits = 32;
};

struct SlopeReport {
  SlopeRunParams params;
  CharacterClass cls = CharacterClass::F2;
  std::vector<Rational> slopes;  // from the (n, N) run
  int certified = 0;             // identical across the (n,n+5)x(N,N+8) grid
  bool formula_match = false;    // certified slopes equal the class formula
  std::vector<std::string> uncertified_tail;
};

// Runs (n, N), (n+5, N), (n, N+8); a slope is certified when present and
// equal in all three. Throws instability_error below 5 certified slopes.
SlopeReport certified_slopes(const SlopeRunParams& params);

// Shared grid state for sweeping many characters / weights: the two contexts
// and workspaces are built once; per-character column sets are reused across
// weight offsets. Characters may run on concurrent workers (the workspaces
// are immutable after construction).
class SlopeSweep {
 public:
  SlopeSweep(int n, unsigned digits);

  // column sets on both grid workspaces for one character
  struct CharColumns {
    ColumnSet a, b;
  };
  CharColumns build_columns(const DirichletCharacter& chi) const;
  SlopeReport run_with(const CharColumns& cc, const DirichletCharacter& chi,
                       const DirichletCharacter& tau, int t) const;

  SlopeReport run(const DirichletCharacter& chi, const DirichletCharacter& tau, int t) const;
  // full grid over characters x weight offsets, fanned out one worker per
  // character; reports come back in (character, t) order
  std::vector<SlopeReport> run_all(const std::vector<DirichletCharacter>& chars,
                                   const std::vector<int>& ts,
                                   const DirichletCharacter& tau) const;

  const Workspace& workspace_a() const { return ws_a_; }

 private:
  int n_;
  PrecisionContext ctx_a_, ctx_b_;
  Workspace ws_a_;  // n+5 at N
  Workspace ws_b_;  // n at N+8
};

struct SerreColumn {
  int j = 0;
  QuarterVal min_val;           // min over sqrt5-conjugated entries of column j
  std::vector<int> min_rows;    // rows attaining it
  bool pass = false;            // min_val >= s(j)
};

struct SerreMinor {
  int m = 0;
  QuarterVal expected;                 // sum_{i<=m} s(i)
  bool unit_cert = false;              // det(P'_m) != 0 in F_25
  std::optional<QuarterVal> raw_val;   // v(det M_m) when below the watermark
  bool pass = false;
};

struct SerreReport {
  CharacterClass cls = CharacterClass::F2;
  int m_max = 0;
  std::vector<SerreColumn> columns;  // condition (b)
  std::vector<SerreMinor> minors;    // condition (a)
  bool pass_a = false;
  bool pass_b = false;
};

// Audit of the two Serre conditions against the class slope formula. The
// column scaling is the sqrt(5)-conjugation O = D(sqrt5^-i) M D(sqrt5^j);
// condition (a) combines the unit-determinant certificate of
// P_m = O_m D(5^{-s(j)}) reduced mod pi with raw determinant valuations
// wherever they sit below the precision watermark.
SerreReport serre_audit(const UMatrix& M, CharacterClass cls, int m_max);

}  // namespace u5s
