#include "u5slopes/slopes.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "u5slopes/errors.hpp"

namespace u5s {

QuarterVal slope_quarters(int i, CharacterClass cls) {
  if (i < 1) throw domain_error("slope_formula: index must be positive");
  return QuarterVal(cls == CharacterClass::F1 ? (8 * static_cast<std::int64_t>(i) + 4) / 5
                                              : (8 * static_cast<std::int64_t>(i)) / 5);
}

Rational slope_formula(int i, CharacterClass cls) {
  return Rational::from_quarters(slope_quarters(i, cls).q);
}

std::vector<RingElement> berkowitz_charpoly(const UMatrix& M,
                                            std::vector<RingElement>* leading_minors) {
  const PrecisionContext& ctx = M.at(1, 1).context();
  const int n = M.n;
  if (leading_minors) leading_minors->clear();

  std::vector<RingElement> p = {RingElement::one(ctx), -M.at(1, 1)};
  if (leading_minors) leading_minors->push_back(M.at(1, 1));

  std::vector<RingElement> row, col, vec, nvec, t, np;
  for (int m = 2; m <= n; ++m) {
    row.assign(static_cast<std::size_t>(m - 1), RingElement::zero(ctx));
    col.assign(static_cast<std::size_t>(m - 1), RingElement::zero(ctx));
    for (int k = 1; k < m; ++k) {
      row[static_cast<std::size_t>(k - 1)] = M.at(m, k);
      col[static_cast<std::size_t>(k - 1)] = M.at(k, m);
    }
    // Toeplitz column: 1, -a_mm, -R S, -R M' S, -R M'^2 S, ...
    t.assign(static_cast<std::size_t>(m) + 1, RingElement::zero(ctx));
    t[0] = RingElement::one(ctx);
    t[1] = -M.at(m, m);
    vec = col;
    for (int k = 0; k < m - 1; ++k) {
      RingElement acc = RingElement::zero(ctx);
      for (int i = 0; i < m - 1; ++i)
        acc = acc + row[static_cast<std::size_t>(i)] * vec[static_cast<std::size_t>(i)];
      t[static_cast<std::size_t>(k + 2)] = -acc;
      if (k < m - 2) {
        nvec.assign(static_cast<std::size_t>(m - 1), RingElement::zero(ctx));
        for (int i = 1; i < m; ++i) {
          RingElement s = RingElement::zero(ctx);
          for (int jj = 1; jj < m; ++jj) {
            const RingElement& a = M.at(i, jj);
            if (a.is_zero()) continue;
            s = s + a * vec[static_cast<std::size_t>(jj - 1)];
          }
          nvec[static_cast<std::size_t>(i - 1)] = s;
        }
        vec.swap(nvec);
      }
    }
    np.assign(static_cast<std::size_t>(m) + 1, RingElement::zero(ctx));
    for (int i = 0; i <= m; ++i) {
      for (int k = 0; k < static_cast<int>(p.size()); ++k) {
        int d = i - k;
        if (d < 0 || d > m) continue;
        const RingElement& td = t[static_cast<std::size_t>(d)];
        if (td.is_zero()) continue;
        np[static_cast<std::size_t>(i)] = np[static_cast<std::size_t>(i)] +
                                          td * p[static_cast<std::size_t>(k)];
      }
    }
    p.swap(np);
    if (leading_minors) {
      RingElement det = p[static_cast<std::size_t>(m)];
      leading_minors->push_back(m % 2 == 0 ? det : -det);
    }
  }
  return p;
}

NewtonPolygon newton_slopes(const std::vector<RingElement>& coeffs, int prec_quarters) {
  if (coeffs.empty() || coeffs[0].valuation() != QuarterVal(0))
    throw domain_error("newton_slopes: c_0 must be a unit");
  NewtonPolygon out;
  for (int m = 0; m < static_cast<int>(coeffs.size()); ++m) {
    QuarterVal v = coeffs[static_cast<std::size_t>(m)].valuation();
    if (v.q >= prec_quarters - kGuardQuarters) continue;  // not visible
    out.points.push_back({m, v});
  }
  // lower convex hull, left to right
  std::vector<NewtonPoint>& hull = out.vertices;
  for (const NewtonPoint& pt : out.points) {
    while (hull.size() >= 2) {
      const NewtonPoint& a = hull[hull.size() - 2];
      const NewtonPoint& b = hull[hull.size() - 1];
      // pop b if it lies on or above segment a->pt
      __int128 lhs = static_cast<__int128>(b.v.q - a.v.q) * (pt.m - a.m);
      __int128 rhs = static_cast<__int128>(pt.v.q - a.v.q) * (b.m - a.m);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const NewtonPoint& a = hull[k];
    const NewtonPoint& b = hull[k + 1];
    Rational s(b.v.q - a.v.q, 4 * static_cast<std::int64_t>(b.m - a.m));
    for (int r = 0; r < b.m - a.m; ++r) out.slopes.push_back(s);
  }
  return out;
}

namespace {

std::vector<Rational> polygon_for(const Workspace& ws, const ColumnSet& cols,
                                  const DirichletCharacter& tau, int t, int n) {
  UMatrix M = assemble(ws, cols, tau, t, n);
  std::vector<RingElement> cp = berkowitz_charpoly(M);
  int prec = 4 * static_cast<int>(ws.ctx->digits());
  for (const auto& col : cols.u5cols) prec = std::min(prec, col.prec);
  return newton_slopes(cp, prec).slopes;
}

}  // namespace

SlopeSweep::SlopeSweep(int n, unsigned digits)
    : n_(n),
      ctx_a_(digits),
      ctx_b_(digits + 8),
      ws_a_(make_workspace(ctx_a_, n + 5)),
      ws_b_(make_workspace(ctx_b_, n)) {
  if (n < 10) throw domain_error("certified_slopes: n must be at least 10");
}

SlopeSweep::CharColumns SlopeSweep::build_columns(const DirichletCharacter& chi) const {
  return {build_column_set(ws_a_, chi, n_ + 5), build_column_set(ws_b_, chi, n_)};
}

SlopeReport SlopeSweep::run_with(const CharColumns& cc, const DirichletCharacter& chi,
                                 const DirichletCharacter& tau, int t) const {
  SlopeReport rep;
  rep.params = {chi.exponent, tau.exponent, t, n_, ctx_a_.digits()};
  rep.cls = classify(chi, ws_a_.phi, ws_a_.basics);

  std::vector<Rational> s1 = polygon_for(ws_a_, cc.a, tau, t, n_);
  std::vector<Rational> s2 = polygon_for(ws_a_, cc.a, tau, t, n_ + 5);
  std::vector<Rational> s3 = polygon_for(ws_b_, cc.b, tau, t, n_);

  rep.slopes = s1;
  std::size_t lim = std::min({s1.size(), s2.size(), s3.size()});
  std::size_t cert = 0;
  while (cert < lim && s1[cert] == s2[cert] && s1[cert] == s3[cert]) ++cert;
  rep.certified = static_cast<int>(cert);
  for (std::size_t i = cert; i < s1.size(); ++i) rep.uncertified_tail.push_back(s1[i].str());

  rep.formula_match = true;
  for (std::size_t i = 0; i < cert; ++i) {
    if (s1[i] != slope_formula(static_cast<int>(i) + 1, rep.cls)) rep.formula_match = false;
  }
  if (rep.certified < 5)
    throw instability_error("certified_slopes: fewer than 5 certified slopes; raise digits or n");
  return rep;
}

SlopeReport SlopeSweep::run(const DirichletCharacter& chi, const DirichletCharacter& tau,
                            int t) const {
  return run_with(build_columns(chi), chi, tau, t);
}

std::vector<SlopeReport> SlopeSweep::run_all(const std::vector<DirichletCharacter>& chars,
                                             const std::vector<int>& ts,
                                             const DirichletCharacter& tau) const {
  std::vector<std::future<std::vector<SlopeReport>>> futures;
  futures.reserve(chars.size());
  for (const auto& chi : chars) {
    futures.push_back(std::async(std::launch::async, [this, chi, &ts, &tau] {
      CharColumns cc = build_columns(chi);
      std::vector<SlopeReport> out;
      for (int t : ts) out.push_back(run_with(cc, chi, tau, t));
      return out;
    }));
  }
  std::vector<SlopeReport> all;
  for (auto& f : futures) {
    auto part = f.get();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

SlopeReport certified_slopes(const SlopeRunParams& params) {
  SlopeSweep sweep(params.n, params.digits);
  DirichletCharacter chi{25, params.char_exponent};
  DirichletCharacter tau{5, params.tau_exponent};
  return sweep.run(chi, tau, params.t);
}

SerreReport serre_audit(const UMatrix& M_in, CharacterClass cls, int m_max) {
  // audit works from the T-basis entries; determinant claims are basis-free
  const UMatrix* Mp = &M_in;
  UMatrix tmp;
  if (M_in.basis == Basis::W) {
    // undo the W scaling: T entry (i,j) = W entry * pi^(i-j)
    tmp = M_in;
    tmp.basis = Basis::T;
    for (int i = 1; i <= M_in.n; ++i)
      for (int j = 1; j <= M_in.n; ++j) {
        const RingElement& x = M_in.at(i, j);
        if (x.is_zero()) continue;
        tmp.at(i, j) = i >= j ? x.mul_pi_pow(i - j) : x.shift_right_exact(j - i);
      }
    Mp = &tmp;
  }
  const UMatrix& M = *Mp;
  const PrecisionContext& ctx = M.at(1, 1).context();
  const int cap = 4 * static_cast<int>(ctx.digits());
  if (m_max > M.n) throw domain_error("serre_audit: m_max exceeds matrix size");

  SerreReport rep;
  rep.cls = cls;
  rep.m_max = m_max;
  rep.pass_b = true;

  // condition (b): sqrt5-conjugated entry (i,j) has valuation
  // v(m_ij) + 2(j-i) quarters, which must be >= s(j)
  for (int j = 1; j <= m_max; ++j) {
    SerreColumn colrep;
    colrep.j = j;
    QuarterVal s_j = slope_quarters(j, cls);
    std::int64_t best = QuarterVal::kInf;
    for (int i = 1; i <= M.n; ++i) {
      QuarterVal v = M.at(i, j).valuation();
      std::int64_t o = v.is_infinite() ? QuarterVal::kInf : v.q + 2 * (j - i);
      if (o < best) best = o;
    }
    colrep.min_val = best >= QuarterVal::kInf ? QuarterVal::infinite() : QuarterVal(best);
    for (int i = 1; i <= M.n; ++i) {
      QuarterVal v = M.at(i, j).valuation();
      if (!v.is_infinite() && v.q + 2 * (j - i) == best) colrep.min_rows.push_back(i);
    }
    colrep.pass = colrep.min_val.q >= s_j.q;
    // entries hidden behind the watermark must be coverable by the bound
    for (int i = 1; i <= M.n; ++i) {
      if (M.at(i, j).valuation().is_infinite() && cap - kGuardQuarters + 2 * (j - i) < s_j.q)
        throw precision_error("serre_audit: column bound undecidable at working precision");
    }
    if (!colrep.pass) rep.pass_b = false;
    rep.columns.push_back(std::move(colrep));
  }

  // P'_m = (O_m * D(5^{-s(j)})) mod pi over F_25: entry scale pi^(2(j-i)-s_q(j))
  std::vector<F25> pprime(static_cast<std::size_t>(m_max) * m_max, F25{});
  for (int i = 1; i <= m_max; ++i) {
    for (int j = 1; j <= m_max; ++j) {
      const RingElement& x = M.at(i, j);
      if (x.is_zero()) continue;
      std::int64_t e = 2 * (j - i) - slope_quarters(j, cls).q;
      F25 r{};
      if (e > 0) {
        r = F25{};  // pi^e * x = 0 mod pi
      } else if (e == 0) {
        r = x.residue();
      } else {
        QuarterVal v = x.valuation();
        if (v.q < -e) {
          r = F25{};  // condition (b) failed here; recorded above
        } else {
          r = x.shift_right_exact(static_cast<int>(-e)).residue();
        }
      }
      pprime[static_cast<std::size_t>((i - 1) * m_max + (j - 1))] = r;
    }
  }

  // raw determinant valuations from one Berkowitz pass where visible
  std::vector<RingElement> minors;
  {
    UMatrix blk = M;
    if (M.n > m_max) {
      blk.n = m_max;
      blk.m.assign(static_cast<std::size_t>(m_max) * m_max, RingElement::zero(ctx));
      for (int i = 1; i <= m_max; ++i)
        for (int j = 1; j <= m_max; ++j) blk.at(i, j) = M.at(i, j);
    }
    berkowitz_charpoly(blk, &minors);
  }

  rep.pass_a = true;
  std::int64_t cum = 0;
  for (int m = 1; m <= m_max; ++m) {
    SerreMinor row;
    row.m = m;
    cum += slope_quarters(m, cls).q;
    row.expected = QuarterVal(cum);

    // unit-determinant certificate of the m x m block of P'
    std::vector<F25> g(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        g[static_cast<std::size_t>(i * m + j)] =
            pprime[static_cast<std::size_t>(i * m_max + j)];
    bool unit = true;
    for (int piv = 0; piv < m && unit; ++piv) {
      int sel = -1;
      for (int i = piv; i < m; ++i)
        if (!g[static_cast<std::size_t>(i * m + piv)].is_zero()) { sel = i; break; }
      if (sel < 0) { unit = false; break; }
      if (sel != piv)
        for (int j = 0; j < m; ++j)
          std::swap(g[static_cast<std::size_t>(sel * m + j)], g[static_cast<std::size_t>(piv * m + j)]);
      F25 inv = f25_inv(g[static_cast<std::size_t>(piv * m + piv)]);
      for (int i = piv + 1; i < m; ++i) {
        F25 f = f25_mul(g[static_cast<std::size_t>(i * m + piv)], inv);
        if (f.is_zero()) continue;
        for (int j = piv; j < m; ++j)
          g[static_cast<std::size_t>(i * m + j)] =
              f25_sub(g[static_cast<std::size_t>(i * m + j)],
                      f25_mul(f, g[static_cast<std::size_t>(piv * m + j)]));
      }
    }
    row.unit_cert = unit;

    QuarterVal raw = minors[static_cast<std::size_t>(m - 1)].valuation();
    bool raw_visible = cum < cap - kGuardQuarters;
    if (raw_visible) row.raw_val = raw;
    row.pass = unit && (!raw_visible || raw == row.expected);
    if (!row.pass) rep.pass_a = false;
    rep.minors.push_back(std::move(row));
  }
  return rep;
}

}  // namespace u5s
