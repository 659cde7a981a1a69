#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cvxdual/groebner.hpp"
#include "cvxdual/matrix.hpp"

namespace cvxdual {

// ---------------------------------------------------------------------------
// Projective varieties.
// ---------------------------------------------------------------------------

template <class K>
struct ProjectiveVarietyT {
  IdealT<K> ideal;  // homogeneous, in x_0..x_n
  int codim = 0;
};

using ProjectiveVariety = ProjectiveVarietyT<Rat>;
using ProjectiveVarietyFp = ProjectiveVarietyT<Fp>;

/// Validates homogeneity and computes the codimension; throws on an empty
/// generator list or an empty variety.
template <class K>
ProjectiveVarietyT<K> projective_variety(const IdealT<K>& i) {
  if (i.gens.empty())
    throw math_error("projective_variety: no nonzero generators");
  for (const auto& g : i.gens)
    if (!g.is_homogeneous())
      throw math_error("projective_variety: generator not homogeneous");
  int dim = ideal_dimension(i, true);
  if (dim < 0) throw math_error("projective_variety: empty variety");
  return ProjectiveVarietyT<K>{i, i.ring->arity() - 1 - dim};
}

/// p x (n+1) matrix of partial derivatives of the generators.
template <class K>
DenseMatrix<Polynomial<K>> jacobian(const ProjectiveVarietyT<K>& v) {
  const auto& r = v.ideal.ring;
  int p = static_cast<int>(v.ideal.gens.size());
  DenseMatrix<Polynomial<K>> m(p, r->arity(), Polynomial<K>(r));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < r->arity(); ++j)
      m.at(i, j) = v.ideal.gens[i].derivative(j);
  return m;
}

namespace dualdetail {

template <class K>
IdealT<K> irrelevant_ideal(const RingPtr<K>& r) {
  std::vector<Polynomial<K>> gens;
  gens.reserve(r->arity());
  for (int v = 0; v < r->arity(); ++v)
    gens.push_back(Polynomial<K>::variable(r, v));
  return make_ideal(r, std::move(gens));
}

/// Nonzero k x k minors with proportional duplicates removed.
template <class K>
std::vector<Polynomial<K>> distinct_minors(const DenseMatrix<Polynomial<K>>& m,
                                           int k) {
  std::vector<Polynomial<K>> out;
  if (k < 1 || k > m.rows() || k > m.cols()) return out;
  for (auto& p : minors(m, k)) {
    if (p.is_zero()) continue;
    bool dup = false;
    for (const auto& q : out)
      if (proportional(p, q)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

/// Appends `more` to `names`, freshening each entry against what precedes it.
inline std::vector<std::string> append_fresh(
    std::vector<std::string> names, const std::vector<std::string>& more) {
  for (const auto& nm : more)
    names.push_back(gbdetail::fresh_var_name(names, nm));
  return names;
}

/// Dual coordinate names: an explicit override or "u"-prefixed primal names.
inline std::vector<std::string> dual_block_names(
    const std::vector<std::string>& primal,
    const std::vector<std::string>& override_names) {
  if (!override_names.empty()) {
    if (override_names.size() != primal.size())
      throw math_error("dual names: need one per primal coordinate");
    return override_names;
  }
  std::vector<std::string> out;
  out.reserve(primal.size());
  for (const auto& nm : primal) out.push_back("u" + nm);
  return out;
}

inline std::vector<std::string> point_block_names(
    const std::vector<std::string>& primal, char tag) {
  std::vector<std::string> out;
  out.reserve(primal.size());
  for (const auto& nm : primal) out.push_back(std::string(1, tag) + nm);
  return out;
}

/// Eliminates everything outside the leading block of `keep` variables and
/// returns the reduced result in a standalone ring on that block.
template <class K>
IdealT<K> leading_block_ideal(const IdealT<K>& i, int keep) {
  const auto& r = i.ring;
  std::vector<int> drop;
  for (int v = keep; v < r->arity(); ++v) drop.push_back(v);
  auto elim = eliminate(i, drop);
  std::vector<std::string> names(r->names().begin(),
                                 r->names().begin() + keep);
  auto rk = std::make_shared<const Ring<K>>(std::move(names), r->one());
  std::vector<int> back(r->arity(), -1);
  for (int v = 0; v < keep; ++v) back[v] = v;
  std::vector<Polynomial<K>> gens;
  gens.reserve(elim.gens.size());
  for (const auto& p : elim.gens) gens.push_back(map_to_ring(p, rk, back));
  auto gb = buchberger(make_ideal(rk, std::move(gens)));
  return make_ideal(rk, gb.elems);
}

}  // namespace dualdetail

/// Ideal of X plus the codim x codim minors of the Jacobian, saturated by the
/// irrelevant ideal so that an empty projective locus is the unit ideal.
template <class K>
IdealT<K> singular_locus(const ProjectiveVarietyT<K>& v) {
  auto gens = v.ideal.gens;
  for (auto& m : dualdetail::distinct_minors(jacobian(v), v.codim))
    gens.push_back(std::move(m));
  auto raw = make_ideal(v.ideal.ring, std::move(gens));
  return saturate(raw, dualdetail::irrelevant_ideal<K>(v.ideal.ring));
}

/// True when the projective singular locus is empty.
template <class K>
bool is_smooth(const ProjectiveVarietyT<K>& v) {
  return ideal_dimension(singular_locus(v), true) < 0;
}

// ---------------------------------------------------------------------------
// Conormal and dual varieties.
// ---------------------------------------------------------------------------

template <class K>
struct ConormalIdealT {
  IdealT<K> ideal;  // bihomogeneous, x-block then u-block
  int n = 0;
};

using ConormalIdeal = ConormalIdealT<Rat>;
using ConormalIdealFp = ConormalIdealT<Fp>;

/// Projective dimension of the conormal variety (cone dimension minus 2).
template <class K>
int conormal_dimension(const ConormalIdealT<K>& cn) {
  return ideal_dimension(cn.ideal) - 2;
}

/// Pairs the points of X with the hyperplanes annihilating the tangent space:
/// I + <sum u_i x_i> + (c+1)-minors of the Jacobian with the u-row appended,
/// saturated by the locus where the Jacobian drops below rank c.  For smooth
/// X that locus meets the cone over X only at the origin, so the saturation
/// runs against the x-block coordinates instead of the c x c minors.
template <class K>
ConormalIdealT<K> conormal_ideal(const ProjectiveVarietyT<K>& v,
                                 const std::vector<std::string>& dual_names =
                                     {}) {
  const auto& r = v.ideal.ring;
  int m = r->arity();
  auto names = dualdetail::append_fresh(
      r->names(), dualdetail::dual_block_names(r->names(), dual_names));
  auto r2 = std::make_shared<const Ring<K>>(std::move(names), r->one());
  std::vector<int> xmap(m);
  for (int i = 0; i < m; ++i) xmap[i] = i;

  std::vector<Polynomial<K>> gens;
  for (const auto& g : v.ideal.gens) gens.push_back(map_to_ring(g, r2, xmap));
  Polynomial<K> pairing(r2);
  for (int i = 0; i < m; ++i)
    pairing = pairing + Polynomial<K>::variable(r2, m + i) *
                            Polynomial<K>::variable(r2, i);
  gens.push_back(pairing);

  auto jac = jacobian(v);
  DenseMatrix<Polynomial<K>> aug(jac.rows() + 1, m, Polynomial<K>(r2));
  for (int i = 0; i < jac.rows(); ++i)
    for (int j = 0; j < m; ++j)
      aug.at(i, j) = map_to_ring(jac.at(i, j), r2, xmap);
  for (int j = 0; j < m; ++j)
    aug.at(jac.rows(), j) = Polynomial<K>::variable(r2, m + j);
  for (auto& mn : dualdetail::distinct_minors(aug, v.codim + 1))
    gens.push_back(std::move(mn));
  auto jprime = make_ideal(r2, std::move(gens));

  auto sat_by = [&]() -> IdealT<K> {
    if (is_smooth(v)) {
      std::vector<Polynomial<K>> xs;
      for (int i = 0; i < m; ++i) xs.push_back(Polynomial<K>::variable(r2, i));
      return make_ideal(r2, std::move(xs));
    }
    std::vector<Polynomial<K>> ms;
    for (const auto& mn : dualdetail::distinct_minors(jac, v.codim))
      ms.push_back(map_to_ring(mn, r2, xmap));
    if (ms.empty())
      throw math_error("conormal_ideal: Jacobian rank degenerate");
    return make_ideal(r2, std::move(ms));
  }();
  return ConormalIdealT<K>{saturate(jprime, sat_by), m - 1};
}

template <class K>
struct DualVarietyT {
  IdealT<K> ideal;  // reduced basis in the dual ring
  bool principal = false;
  Polynomial<K> generator;  // monic when principal, zero otherwise
};

using DualVariety = DualVarietyT<Rat>;
using DualVarietyFp = DualVarietyT<Fp>;

/// Eliminates the point block from a conormal ideal.
template <class K>
DualVarietyT<K> dual_from_conormal(const ConormalIdealT<K>& cn) {
  const auto& big = cn.ideal.ring;
  int m = cn.n + 1;
  std::vector<int> xs(m);
  for (int i = 0; i < m; ++i) xs[i] = i;
  auto elim = eliminate(cn.ideal, xs);
  std::vector<std::string> unames(big->names().begin() + m,
                                  big->names().end());
  auto ur = std::make_shared<const Ring<K>>(std::move(unames), big->one());
  std::vector<int> back(big->arity(), -1);
  for (int i = m; i < big->arity(); ++i) back[i] = i - m;
  std::vector<Polynomial<K>> gens;
  gens.reserve(elim.gens.size());
  for (const auto& p : elim.gens) gens.push_back(map_to_ring(p, ur, back));
  auto gb = buchberger(make_ideal(ur, std::move(gens)));
  DualVarietyT<K> out{make_ideal(ur, gb.elems), false, Polynomial<K>(ur)};
  if (gb.elems.size() == 1 && !gb.elems[0].is_constant()) {
    out.principal = true;
    out.generator = gb.elems[0];
  }
  return out;
}

template <class K>
DualVarietyT<K> dual_variety(const ProjectiveVarietyT<K>& v,
                             const std::vector<std::string>& dual_names = {}) {
  return dual_from_conormal(conormal_ideal(v, dual_names));
}

// ---------------------------------------------------------------------------
// Eliminants of finite projective schemes.
// ---------------------------------------------------------------------------

namespace dualdetail {

inline void monos_of_degree(int arity, int deg, int var, Mono& cur,
                            std::vector<Mono>& out) {
  if (var == arity - 1) {
    cur.set_exp(var, deg);
    out.push_back(cur);
    cur.set_exp(var, 0);
    return;
  }
  for (int e = 0; e <= deg; ++e) {
    cur.set_exp(var, e);
    monos_of_degree(arity, deg - e, var + 1, cur, out);
  }
  cur.set_exp(var, 0);
}

inline std::vector<Mono> standard_monos(const std::vector<Mono>& lms,
                                        int arity, int deg) {
  std::vector<Mono> all, out;
  Mono cur = Mono::one();
  monos_of_degree(arity, deg, 0, cur, all);
  for (const auto& m : all) {
    bool reducible = false;
    for (const auto& l : lms)
      if (l.divides(m)) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(m);
  }
  return out;
}

}  // namespace dualdetail

/// Univariate eliminant of the ratio num/den on a finite projective scheme:
/// multiplication by num - t*den between consecutive graded pieces of the
/// quotient ring drops rank exactly at the ratio values, so the returned
/// polynomial in t has one root num(P)/den(P) per point P, counted with
/// multiplicity.  num and den must be linear forms with den nonvanishing on
/// the points (a generic choice; a degenerate pencil throws).
inline UPoly ratio_eliminant(const Ideal& i, const Polynomial<Rat>& num,
                             const Polynomial<Rat>& den) {
  if (num.is_zero() || num.total_degree() != 1 || den.is_zero() ||
      den.total_degree() != 1)
    throw math_error("ratio_eliminant: num and den must be linear forms");
  auto gb = buchberger(i);
  std::vector<Mono> lms;
  for (const auto& e : gb.elems) {
    if (e.is_constant()) throw math_error("ratio_eliminant: empty scheme");
    lms.push_back(e.resorted(gb.ord).leading_mono());
  }
  int arity = i.ring->arity();
  size_t prev = 0;
  int stable_at = -1;
  for (int d = 1; d < 128 && stable_at < 0; ++d) {
    size_t dim = dualdetail::standard_monos(lms, arity, d).size();
    if (d > 1 && dim == prev && dim > 0) stable_at = d - 1;
    prev = dim;
  }
  if (stable_at < 0)
    throw math_error("ratio_eliminant: Hilbert function did not stabilize");
  auto rt = make_ring({"t"});
  auto t = Polynomial<Rat>::variable(rt, 0);
  for (int d = stable_at; d < stable_at + 3; ++d) {
    auto lo = dualdetail::standard_monos(lms, arity, d);
    auto hi = dualdetail::standard_monos(lms, arity, d + 1);
    if (lo.size() != hi.size()) continue;
    int n = static_cast<int>(lo.size());
    DenseMatrix<Polynomial<Rat>> pencil(n, n, Polynomial<Rat>(rt));
    for (int j = 0; j < n; ++j) {
      auto mono = Polynomial<Rat>::from_sorted_terms(i.ring, gb.ord,
                                                     {{lo[j], Rat(1)}});
      auto fa = normal_form(num * mono, gb);
      auto fb = normal_form(den * mono, gb);
      for (int k = 0; k < n; ++k) {
        Rat ca(0), cb(0);
        for (const auto& term : fa.terms())
          if (term.m == hi[k]) ca = term.c;
        for (const auto& term : fb.terms())
          if (term.m == hi[k]) cb = term.c;
        pencil.at(k, j) =
            Polynomial<Rat>::constant(rt, ca) - t.scaled(cb);
      }
    }
    auto chi = pencil.det();
    if (chi.is_zero()) continue;
    auto up = to_upoly(chi, 0);
    if (up.degree() == n) return up;
  }
  throw math_error("ratio_eliminant: pencil degenerate for num/den");
}

// ---------------------------------------------------------------------------
// k-tangency: hyperplanes tangent at k distinct regular points.
// ---------------------------------------------------------------------------

/// Ideal in the dual ring of the closure of hyperplanes tangent to X at k
/// distinct regular points (k = 2: bitangents and edge pre-duals; k = 3:
/// tritangent hyperplanes).  Distinctness is enforced by saturating with the
/// ideal of k x k minors of the stacked point coordinates, which also removes
/// the cone apexes; when X is singular the correspondence is additionally
/// saturated by the rank-drop minors at each point.
template <class K>
IdealT<K> tangency_ideal(const ProjectiveVarietyT<K>& v, int k = 2,
                         const std::vector<std::string>& dual_names = {}) {
  if (k < 2 || k > 3) throw math_error("tangency_ideal: k must be 2 or 3");
  const auto& r = v.ideal.ring;
  int m = r->arity();
  int c = v.codim;
  bool smooth = is_smooth(v);
  auto jac = jacobian(v);
  auto unames = dualdetail::dual_block_names(r->names(), dual_names);
  auto rank_minors = dualdetail::distinct_minors(jac, c);

  if (m == 3 && k == 2 && c == 1) {
    // Plane curves: first close up the pairs (a, b) on X with each point on
    // the other's tangent line, then attach the line through the two points.
    auto n1 = dualdetail::append_fresh(
        dualdetail::point_block_names(r->names(), 'a'),
        dualdetail::point_block_names(r->names(), 'b'));
    auto r1 = std::make_shared<const Ring<K>>(n1, r->one());
    std::vector<int> amap(m), bmap(m);
    for (int i = 0; i < m; ++i) {
      amap[i] = i;
      bmap[i] = m + i;
    }
    std::vector<Polynomial<K>> gens;
    for (const auto& g : v.ideal.gens) {
      gens.push_back(map_to_ring(g, r1, amap));
      gens.push_back(map_to_ring(g, r1, bmap));
    }
    for (int i = 0; i < jac.rows(); ++i) {
      Polynomial<K> ta(r1), tb(r1);
      for (int j = 0; j < m; ++j) {
        ta = ta + map_to_ring(jac.at(i, j), r1, amap) *
                      Polynomial<K>::variable(r1, m + j);
        tb = tb + map_to_ring(jac.at(i, j), r1, bmap) *
                      Polynomial<K>::variable(r1, j);
      }
      gens.push_back(ta);
      gens.push_back(tb);
    }
    auto s = make_ideal(r1, std::move(gens));
    if (!smooth) {
      for (const auto& pmap : {amap, bmap}) {
        std::vector<Polynomial<K>> ms;
        for (const auto& mn : rank_minors)
          ms.push_back(map_to_ring(mn, r1, pmap));
        s = saturate(s, make_ideal(r1, std::move(ms)));
      }
    }
    DenseMatrix<Polynomial<K>> pts(2, m, Polynomial<K>(r1));
    for (int j = 0; j < m; ++j) {
      pts.at(0, j) = Polynomial<K>::variable(r1, j);
      pts.at(1, j) = Polynomial<K>::variable(r1, m + j);
    }
    s = saturate(s, make_ideal(r1, dualdetail::distinct_minors(pts, 2)));

    auto full = dualdetail::append_fresh(unames, n1);
    auto r2 = std::make_shared<const Ring<K>>(full, r->one());
    std::vector<int> up(2 * m);
    for (int i = 0; i < 2 * m; ++i) up[i] = m + i;
    std::vector<Polynomial<K>> gens2;
    for (const auto& p : s.gens) gens2.push_back(map_to_ring(p, r2, up));
    // The line through a and b is their cross product; the graph ideal
    // eliminates quickly and its contraction to the u-block is radical.
    auto pv = [&](int j) { return Polynomial<K>::variable(r2, j); };
    gens2.push_back(pv(0) - pv(m + 1) * pv(2 * m + 2) +
                    pv(m + 2) * pv(2 * m + 1));
    gens2.push_back(pv(1) - pv(m + 2) * pv(2 * m) + pv(m) * pv(2 * m + 2));
    gens2.push_back(pv(2) - pv(m) * pv(2 * m + 1) + pv(m + 1) * pv(2 * m));
    return dualdetail::leading_block_ideal(make_ideal(r2, std::move(gens2)),
                                           m);
  }

  // General form: one point block per tangency point, coupled through u.
  auto full = unames;
  for (int t = 0; t < k; ++t)
    full = dualdetail::append_fresh(
        std::move(full),
        dualdetail::point_block_names(r->names(), static_cast<char>('a' + t)));
  auto r2 = std::make_shared<const Ring<K>>(full, r->one());
  std::vector<std::vector<int>> pmaps(k, std::vector<int>(m));
  for (int t = 0; t < k; ++t)
    for (int i = 0; i < m; ++i) pmaps[t][i] = m * (t + 1) + i;

  std::vector<Polynomial<K>> gens;
  for (int t = 0; t < k; ++t) {
    for (const auto& g : v.ideal.gens)
      gens.push_back(map_to_ring(g, r2, pmaps[t]));
    Polynomial<K> inc(r2);
    for (int i = 0; i < m; ++i)
      inc = inc + Polynomial<K>::variable(r2, i) *
                      Polynomial<K>::variable(r2, pmaps[t][i]);
    gens.push_back(inc);
    DenseMatrix<Polynomial<K>> aug(jac.rows() + 1, m, Polynomial<K>(r2));
    for (int i = 0; i < jac.rows(); ++i)
      for (int j = 0; j < m; ++j)
        aug.at(i, j) = map_to_ring(jac.at(i, j), r2, pmaps[t]);
    for (int j = 0; j < m; ++j)
      aug.at(jac.rows(), j) = Polynomial<K>::variable(r2, j);
    for (auto& mn : dualdetail::distinct_minors(aug, c + 1))
      gens.push_back(std::move(mn));
  }
  auto tp = make_ideal(r2, std::move(gens));
  if (!smooth) {
    for (int t = 0; t < k; ++t) {
      std::vector<Polynomial<K>> ms;
      for (const auto& mn : rank_minors)
        ms.push_back(map_to_ring(mn, r2, pmaps[t]));
      tp = saturate(tp, make_ideal(r2, std::move(ms)));
    }
  }
  DenseMatrix<Polynomial<K>> pts(k, m, Polynomial<K>(r2));
  for (int t = 0; t < k; ++t)
    for (int j = 0; j < m; ++j)
      pts.at(t, j) = Polynomial<K>::variable(r2, pmaps[t][j]);
  tp = saturate(tp, make_ideal(r2, dualdetail::distinct_minors(pts, k)));
  return dualdetail::leading_block_ideal(tp, m);
}

// ---------------------------------------------------------------------------
// Toric exponent matrices and A-discriminants.
// ---------------------------------------------------------------------------

struct ToricMatrix {
  int d = 0;                  // rows
  int cols = 0;               // number of monomials
  std::vector<long> entries;  // row-major exponents
  long at(int i, int j) const {
    return entries[static_cast<size_t>(i) * cols + j];
  }
};

namespace dualdetail {

inline int rational_rank(std::vector<std::vector<Rat>> rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size());
       ++col) {
    size_t pivot = rows.size();
    for (size_t i = rank; i < rows.size(); ++i)
      if (!rows[i][col].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      Rat f = rows[i][col] / rows[rank][col];
      for (size_t j = col; j < cols; ++j)
        rows[i][j] = rows[i][j] - f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace dualdetail

/// Validated d x cols exponent matrix: full row rank with the all-ones vector
/// in the row space (so the toric variety is projectively well defined).
inline ToricMatrix toric_matrix(int d, int cols, std::vector<long> entries) {
  if (d < 1 || cols < 1 ||
      entries.size() != static_cast<size_t>(d) * static_cast<size_t>(cols))
    throw math_error("toric_matrix: bad shape");
  std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(cols, Rat(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < cols; ++j)
      rows[i][j] = Rat(entries[static_cast<size_t>(i) * cols + j]);
  if (dualdetail::rational_rank(rows) != d)
    throw math_error("toric_matrix: rank below row count");
  rows.push_back(std::vector<Rat>(cols, Rat(1)));
  if (dualdetail::rational_rank(rows) != d)
    throw math_error("toric_matrix: all-ones row not in the row space");
  return ToricMatrix{d, cols, std::move(entries)};
}

/// Exponent matrix of the degree-`deg` Veronese embedding on n variables;
/// columns are the exponent vectors in lexicographic-descending order.
inline ToricMatrix veronese_matrix(int n, int deg) {
  if (n < 1 || deg < 1) throw math_error("veronese_matrix: bad parameters");
  std::vector<std::vector<long>> cols_list;
  std::vector<long> cur(n, 0);
  auto rec = [&](auto&& self, int pos, long left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      cols_list.push_back(cur);
      return;
    }
    for (long e = left; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, deg);
  int cols = static_cast<int>(cols_list.size());
  std::vector<long> entries(static_cast<size_t>(n) * cols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < cols; ++j)
      entries[static_cast<size_t>(i) * cols + j] = cols_list[j][i];
  return toric_matrix(n, cols, std::move(entries));
}

template <class K>
struct ADiscriminantT {
  IdealT<K> ideal;  // reduced basis in c_0..c_n
  bool principal = false;
  Polynomial<K> generator;  // monic when principal, zero otherwise
};

using ADiscriminant = ADiscriminantT<Rat>;
using ADiscriminantFp = ADiscriminantT<Fp>;

/// Eliminates the torus variables from <p, dp/dt_1, .., dp/dt_d> : (t_1..t_d)^inf
/// for p = sum c_j t^{a_j}; rows are shifted nonnegative first, which scales p
/// by a monomial and leaves the critical locus on the torus unchanged.
template <class K>
ADiscriminantT<K> a_discriminant(const ToricMatrix& a, const K& one) {
  std::vector<long> shift(a.d, 0);
  for (int i = 0; i < a.d; ++i)
    for (int j = 0; j < a.cols; ++j)
      shift[i] = std::min(shift[i], a.at(i, j));
  std::vector<std::string> names;
  for (int i = 0; i < a.d; ++i) names.push_back("t" + std::to_string(i + 1));
  for (int j = 0; j < a.cols; ++j) names.push_back("c" + std::to_string(j));
  auto r = std::make_shared<const Ring<K>>(names, one);

  Polynomial<K> p(r);
  for (int j = 0; j < a.cols; ++j) {
    Polynomial<K> term = Polynomial<K>::variable(r, a.d + j);
    for (int i = 0; i < a.d; ++i)
      for (long e = 0; e < a.at(i, j) - shift[i]; ++e)
        term = term * Polynomial<K>::variable(r, i);
    p = p + term;
  }
  std::vector<Polynomial<K>> gens{p};
  for (int i = 0; i < a.d; ++i) gens.push_back(p.derivative(i));
  Polynomial<K> torus = Polynomial<K>::constant(r, one);
  for (int i = 0; i < a.d; ++i)
    torus = torus * Polynomial<K>::variable(r, i);
  auto sat = saturate(make_ideal(r, std::move(gens)), torus);

  auto elim = eliminate(sat, [&]() {
    std::vector<int> ts(a.d);
    for (int i = 0; i < a.d; ++i) ts[i] = i;
    return ts;
  }());
  std::vector<std::string> cnames(names.begin() + a.d, names.end());
  auto cr = std::make_shared<const Ring<K>>(std::move(cnames), one);
  std::vector<int> back(r->arity(), -1);
  for (int v = a.d; v < r->arity(); ++v) back[v] = v - a.d;
  std::vector<Polynomial<K>> cg;
  cg.reserve(elim.gens.size());
  for (const auto& q : elim.gens) cg.push_back(map_to_ring(q, cr, back));
  auto gb = buchberger(make_ideal(cr, std::move(cg)));
  ADiscriminantT<K> out{make_ideal(cr, gb.elems), false, Polynomial<K>(cr)};
  if (gb.elems.size() == 1 && !gb.elems[0].is_constant()) {
    out.principal = true;
    out.generator = gb.elems[0];
  }
  return out;
}

inline ADiscriminant a_discriminant(const ToricMatrix& a) {
  return a_discriminant<Rat>(a, Rat(1));
}

}  // namespace cvxdual
