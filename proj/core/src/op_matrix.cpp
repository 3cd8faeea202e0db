#include "u5slopes/op_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "u5slopes/errors.hpp"
#include "u5slopes/modforms.hpp"

namespace u5s {

TPolynomial q_to_t(const LaurentSeries& f, std::span<const LaurentSeries> t_pows, int dmax,
                   bool assert_exact_degree) {
  if (f.lead < 0) throw domain_error("q_to_t: series has a pole at the cusp");
  if (dmax >= static_cast<int>(t_pows.size()))
    throw precision_error("q_to_t: T-power cache too small");
  const PrecisionContext& ctx = *f.ctx;

  int wlimit = f.window;
  for (int d = 1; d <= dmax; ++d) wlimit = std::min(wlimit, t_pows[static_cast<std::size_t>(d)].window);
  if (wlimit <= dmax)
    throw precision_error("q_to_t: window too small for requested degree");

  LaurentSeries work = LaurentSeries::make(ctx, 0, wlimit);
  work.prec = f.prec;
  for (int e = std::max(0, f.lead); e < wlimit; ++e)
    if (f.in_window(e)) work.at(e) = f.at(e);

  TPolynomial out;
  out.degree = dmax;
  out.c.assign(static_cast<std::size_t>(dmax) + 1, RingElement::zero(ctx));
  out.c[0] = work.at(0);
  for (int d = 1; d <= dmax; ++d) {
    RingElement cd = work.at(d);
    out.c[static_cast<std::size_t>(d)] = cd;
    if (cd.is_zero()) continue;
    const LaurentSeries& td = t_pows[static_cast<std::size_t>(d)];
    for (int e = d; e < wlimit; ++e) {
      const RingElement& te = td.at(e);
      if (te.is_zero()) continue;
      work.at(e) = work.at(e) - cd * te;
    }
  }
  if (assert_exact_degree) {
    for (int e = dmax + 1; e < wlimit; ++e) {
      if (!work.coeff_negligible(e)) {
        std::ostringstream os;
        os << "q_to_t: residual beyond degree " << dmax << " at q^" << e
           << " (valuation " << work.at(e).valuation().str() << ")";
        throw degree_error(os.str());
      }
    }
  }
  return out;
}

Workspace make_workspace(const PrecisionContext& ctx, int n_max) {
  if (n_max < 1) throw domain_error("workspace: n must be at least 1");
  Workspace ws;
  ws.ctx = &ctx;
  ws.basics = RingBasics::make(ctx);
  ws.phi = factor_phi20(ctx);
  ws.n_max = n_max;
  ws.window = 25 * n_max + 30;
  ws.t_window = 5 * n_max + 7;
  ws.dmax = 5 * n_max;
  ws.T = big_t_series(ctx, ws.window);

  ws.t_pows.reserve(static_cast<std::size_t>(ws.dmax) + 1);
  ws.t_pows.push_back(LaurentSeries::make(ctx, 0, 1));  // T^0 slot, unused
  LaurentSeries t_small = ws.T;
  if (t_small.window > ws.t_window) {
    t_small.window = ws.t_window;
    t_small.c.resize(static_cast<std::size_t>(ws.t_window - t_small.lead));
  }
  ws.t_pows.push_back(t_small);
  for (int d = 2; d <= ws.dmax; ++d)
    ws.t_pows.push_back(ls_mul(ws.t_pows.back(), t_small, ws.t_window));
  return ws;
}

ColumnSet build_column_set(const Workspace& ws, const DirichletCharacter& chi, int n) {
  if (n > ws.n_max) throw domain_error("column set: n exceeds workspace n_max");
  ColumnSet out;
  out.chi = chi;
  out.u5cols.reserve(static_cast<std::size_t>(n));
  LaurentSeries ratio = uv_ratio(chi, ws.basics, ws.window);
  LaurentSeries chain = ratio;
  for (int j = 1; j <= n; ++j) {
    chain = ls_mul(chain, ws.T, ws.window);
    out.u5cols.push_back(ls_u5(chain));
  }
  return out;
}

LaurentSeries multiplier_power(const Workspace& ws, const DirichletCharacter& tau, int t) {
  if (tau.modulus != 5 || !tau.odd()) throw domain_error("multiplier: tau must be odd mod 5");
  const PrecisionContext& ctx = *ws.ctx;
  LaurentSeries out = LaurentSeries::make(ctx, 0, ws.t_window);
  out.at(0) = RingElement::one(ctx);
  if (t == 0) return out;
  LaurentSeries base = uv_ratio(tau, ws.basics, ws.t_window);

  // Admissibility: the slope analysis survives the sqrt5-rescaling only when
  // the T^k multiplier coefficient has valuation at least k/2. The designated
  // tau meets this with equality at even k; the conjugate tau does not (its
  // B_{1,tau} has an extra factor of 5, making the coefficients units).
  TPolynomial cs = q_to_t(base, ws.pows(), std::min(8, ws.dmax));
  for (int k = 1; k < static_cast<int>(cs.c.size()); ++k) {
    if (cs.c[static_cast<std::size_t>(k)].valuation().q < 2 * k)
      throw normalization_error(
          "multiplier for tau(2)=" + std::string(tau.exponent == 1 ? "I" : "-I") +
          " violates the T^" + std::to_string(k) + " valuation bound needed by the slope analysis");
  }
  for (int i = 0; i < t; ++i) out = ls_mul(out, base, ws.t_window);
  return out;
}

TPolynomial column(const Workspace& ws, const ColumnSet& cols, const LaurentSeries* mult_pow,
                   int j, int extract_to, bool enforce_degree) {
  if (j < 1 || j > static_cast<int>(cols.u5cols.size()))
    throw domain_error("column: index out of range");
  const LaurentSeries& u5col = cols.u5cols[static_cast<std::size_t>(j - 1)];
  LaurentSeries f = mult_pow ? ls_mul(u5col, *mult_pow) : u5col;
  int dmax = std::min(extract_to, ws.dmax);
  if (enforce_degree) {
    dmax = std::min(5 * j, ws.dmax);
    // the top coefficient has v = 4j digits = 16j quarters; it must sit below
    // the watermark for the degree to be certifiable
    if (16 * j >= f.prec - kGuardQuarters)
      throw precision_error("column: degree assertion needs more precision digits");
  }
  TPolynomial p = q_to_t(f, ws.pows(), dmax, enforce_degree);
  if (enforce_degree) {
    if (!p.c[0].is_zero()) throw degree_error("column: nonzero constant term");
    const RingElement& top = p.c[static_cast<std::size_t>(5 * j)];
    if (top.valuation() != QuarterVal(16 * j))
      throw degree_error("column: top coefficient is not pi^(16j) times a unit");
  }
  return p;
}

UMatrix assemble(const Workspace& ws, const ColumnSet& cols, const DirichletCharacter& tau, int t,
                 int n, Basis basis) {
  if (n < 1 || n > ws.n_max) throw domain_error("assemble: bad truncation size");
  const PrecisionContext& ctx = *ws.ctx;
  LaurentSeries mult = multiplier_power(ws, tau, t);
  const LaurentSeries* mp = t > 0 ? &mult : nullptr;

  UMatrix out;
  out.n = n;
  out.basis = Basis::T;
  out.chi = cols.chi;
  out.tau = tau;
  out.t = t;
  out.scale = 0;
  out.m.assign(static_cast<std::size_t>(n) * n, RingElement::zero(ctx));

  for (int j = 1; j <= n; ++j) {
    // at t=0 the degree assertion is certifiable only while v(c_{5j}) = 4j
    // digits stays below the watermark (margin covers normalization shifts)
    bool enforce = t == 0 && 16 * j < 4 * static_cast<int>(ctx.digits()) - 12;
    TPolynomial col = column(ws, cols, mp, j, n, enforce);
    for (int i = 1; i <= n; ++i) {
      if (i < static_cast<int>(col.c.size())) out.at(i, j) = col.c[static_cast<std::size_t>(i)];
    }
    if (t == 0 && !enforce) {
      // entries above degree 5j are exact zeros by the polynomial structure
      for (int i = 5 * j + 1; i <= n; ++i) out.at(i, j) = RingElement::zero(ctx);
    }
  }
  if (basis == Basis::W) return to_w_basis(out);
  return out;
}

UMatrix to_w_basis(const UMatrix& m_t) {
  if (m_t.basis == Basis::W) return m_t;
  UMatrix out = m_t;
  out.basis = Basis::W;
  for (int i = 1; i <= m_t.n; ++i) {
    for (int j = 1; j <= m_t.n; ++j) {
      const RingElement& x = m_t.at(i, j);
      if (x.is_zero()) continue;
      if (j >= i) {
        out.at(i, j) = x.mul_pi_pow(j - i);
      } else {
        QuarterVal v = x.valuation();
        if (v.q < i - j) {
          std::ostringstream os;
          os << "W-basis integrality failure at entry (" << i << "," << j
             << "): valuation " << v.str() << " < " << QuarterVal(i - j).str();
          throw normalization_error(os.str());
        }
        out.at(i, j) = x.shift_right_exact(i - j);
      }
    }
  }
  return out;
}

}  // namespace u5s
