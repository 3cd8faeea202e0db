#pragma once

#include <span>

#include "u5slopes/characters.hpp"
#include "u5slopes/series.hpp"

namespace u5s {

// Polynomial in T, constant-first; matrix columns have zero constant term.
struct TPolynomial {
  int degree = 0;
  std::vector<RingElement> c;  // c[0..degree]
};

// Triangular extraction of T-coefficients from a q-expansion: T = q + O(q^2)
// with unit leading coefficient, so c_d = [q^d](f - sum_{i<d} c_i T^i).
// t_pows[d] must hold T^d. With assert_exact_degree the residual beyond dmax
// must vanish at the watermark (degree_error otherwise).
TPolynomial q_to_t(const LaurentSeries& f, std::span<const LaurentSeries> t_pows, int dmax,
                   bool assert_exact_degree = false);

// Shared per-run immutable state: ring constants, T at the full q-window and
// T-powers at the post-U5 window. Safe to share across worker threads.
struct Workspace {
  const PrecisionContext* ctx = nullptr;
  RingBasics basics;
  Phi20Factorization phi;
  int n_max = 0;
  int window = 0;    // full q-window, >= 25*n_max + 30
  int t_window = 0;  // post-U5 window
  int dmax = 0;      // T-powers available through T^dmax (= 5*n_max)
  LaurentSeries T;   // full window
  std::vector<LaurentSeries> t_pows;  // [1..dmax] at t_window

  std::span<const LaurentSeries> pows() const { return {t_pows.data(), t_pows.size()}; }
};

Workspace make_workspace(const PrecisionContext& ctx, int n_max);

// U_5(T^j * E*_ratio(chi)) for j = 1..n, cached per character.
struct ColumnSet {
  DirichletCharacter chi;
  std::vector<LaurentSeries> u5cols;  // index j-1
};

ColumnSet build_column_set(const Workspace& ws, const DirichletCharacter& chi, int n);

// Multiplier power (E*_{1,tau}/V(E*_{1,tau}))^t at the post-U5 window.
LaurentSeries multiplier_power(const Workspace& ws, const DirichletCharacter& tau, int t);

// Column j of the twisted-U5 matrix in the T-basis, extracted through
// extract_to. At t = 0 the column is a polynomial of degree exactly 5j with
// unit-times-pi-power top coefficient; enforce_degree asserts this.
TPolynomial column(const Workspace& ws, const ColumnSet& cols, const LaurentSeries* mult_pow,
                   int j, int extract_to, bool enforce_degree);

enum class Basis { T, W };

struct UMatrix {
  int n = 0;
  Basis basis = Basis::T;
  int scale = 0;  // global pi-exponent (0 after assembly)
  DirichletCharacter chi;
  DirichletCharacter tau;
  int t = 0;
  std::vector<RingElement> m;  // row-major, (i,j) 1-based at m[(i-1)*n + (j-1)]

  const RingElement& at(int i, int j) const { return m[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
  RingElement& at(int i, int j) { return m[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
};

// Assemble the n x n truncation; columns are independent given the cached
// ColumnSet. Degree assertions are enforced at t = 0.
UMatrix assemble(const Workspace& ws, const ColumnSet& cols, const DirichletCharacter& tau, int t,
                 int n, Basis basis = Basis::T);

// W-basis view: entry (i,j) times pi^(j-i); integrality is asserted entrywise.
UMatrix to_w_basis(const UMatrix& m_t);

}  // namespace u5s
