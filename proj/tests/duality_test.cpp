#include <gtest/gtest.h>

#include <map>
#include <string>
#include <vector>

#include "cvxdual/duality.hpp"
#include "cvxdual/upoly.hpp"

namespace cvxdual {
namespace {

using PolyQ = Polynomial<Rat>;
using PolyP = Polynomial<Fp>;

PolyQ ppow(PolyQ base, int e) {
  PolyQ r = PolyQ::constant(base.ring(), Rat(1));
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

ProjectiveVariety fermat_curve(int d) {
  auto ring = make_ring({"x", "y", "z"});
  PolyQ x = PolyQ::variable(ring, 0), y = PolyQ::variable(ring, 1),
        z = PolyQ::variable(ring, 2);
  return projective_variety(make_ideal(ring, {ppow(x, d) + ppow(y, d) - ppow(z, d)}));
}

ProjectiveVariety unit_conic() {
  auto ring = make_ring({"x0", "x1", "x2"});
  PolyQ x0 = PolyQ::variable(ring, 0), x1 = PolyQ::variable(ring, 1),
        x2 = PolyQ::variable(ring, 2);
  return projective_variety(make_ideal(ring, {x0 * x0 + x1 * x1 - x2 * x2}));
}

ProjectiveVariety rational_normal_quartic() {
  auto ring = make_ring({"x0", "x1", "x2", "x3", "x4"});
  std::vector<PolyQ> x;
  for (int i = 0; i < 5; ++i) x.push_back(PolyQ::variable(ring, i));
  return projective_variety(
      make_ideal(ring, {x[0] * x[2] - x[1] * x[1], x[0] * x[3] - x[1] * x[2],
                        x[0] * x[4] - x[2] * x[2], x[1] * x[3] - x[2] * x[2],
                        x[1] * x[4] - x[2] * x[3], x[2] * x[4] - x[3] * x[3]}));
}

// Every term has the same degree in the leading block of `m` variables (and,
// with homogeneity, in the complementary block too).
bool bihomogeneous(const PolyQ& p, int m) {
  if (!p.is_homogeneous()) return false;
  int want = -1;
  for (const auto& t : p.terms()) {
    int d = 0;
    for (int v = 0; v < m; ++v) d += t.m.exp(v);
    if (want < 0) want = d;
    if (d != want) return false;
  }
  return true;
}

long affine_patch_degree(const Ideal& i, int var) {
  auto gens = i.gens;
  gens.push_back(PolyQ::variable(i.ring, var) -
                 PolyQ::constant(i.ring, Rat(1)));
  return quotient_degree(make_ideal(i.ring, std::move(gens)));
}

TEST(ProjectiveVarietySetup, ValidatesAndComputesCodim) {
  auto conic = unit_conic();
  EXPECT_EQ(conic.codim, 1);
  EXPECT_EQ(rational_normal_quartic().codim, 3);

  auto ring = make_ring({"x", "y", "z"});
  PolyQ x = PolyQ::variable(ring, 0), y = PolyQ::variable(ring, 1),
        z = PolyQ::variable(ring, 2);
  PolyQ one = PolyQ::constant(ring, Rat(1));
  EXPECT_THROW(projective_variety(make_ideal(ring, {x * x - y})), math_error);
  EXPECT_THROW(projective_variety(make_ideal(ring, {x, y, z})), math_error);
  EXPECT_THROW(projective_variety(make_ideal(ring, std::vector<PolyQ>{})),
               math_error);
  EXPECT_THROW(projective_variety(make_ideal(ring, {one})), math_error);
}

TEST(Jacobian, GradientRows) {
  auto conic = unit_conic();
  auto jac = jacobian(conic);
  ASSERT_EQ(jac.rows(), 1);
  ASSERT_EQ(jac.cols(), 3);
  const auto& r = conic.ideal.ring;
  PolyQ x0 = PolyQ::variable(r, 0), x1 = PolyQ::variable(r, 1),
        x2 = PolyQ::variable(r, 2);
  EXPECT_TRUE((jac.at(0, 0) - (x0 + x0)).is_zero());
  EXPECT_TRUE((jac.at(0, 1) - (x1 + x1)).is_zero());
  EXPECT_TRUE((jac.at(0, 2) + (x2 + x2)).is_zero());

  auto rnc = rational_normal_quartic();
  auto jr = jacobian(rnc);
  EXPECT_EQ(jr.rows(), 6);
  EXPECT_EQ(jr.cols(), 5);
  EXPECT_TRUE((jr.at(0, 0) - PolyQ::variable(rnc.ideal.ring, 2)).is_zero());
}

TEST(SingularLocus, SmoothConicIsUnit) {
  auto s = singular_locus(unit_conic());
  EXPECT_EQ(ideal_dimension(s), -1);
  EXPECT_TRUE(is_smooth(unit_conic()));
}

TEST(SingularLocus, CayleyCubicFourNodes) {
  auto ring = make_ring({"x", "y", "z", "w"});
  PolyQ x = PolyQ::variable(ring, 0), y = PolyQ::variable(ring, 1),
        z = PolyQ::variable(ring, 2), w = PolyQ::variable(ring, 3);
  DenseMatrix<PolyQ> pencil(3, 3, PolyQ(ring));
  pencil.at(0, 0) = w;
  pencil.at(1, 1) = w;
  pencil.at(2, 2) = w;
  pencil.at(0, 1) = x;
  pencil.at(1, 0) = x;
  pencil.at(0, 2) = y;
  pencil.at(2, 0) = y;
  pencil.at(1, 2) = z;
  pencil.at(2, 1) = z;
  auto cayley = projective_variety(make_ideal(ring, {pencil.det()}));
  EXPECT_FALSE(is_smooth(cayley));

  auto s = singular_locus(cayley);
  EXPECT_EQ(ideal_dimension(s, true), 0);
  EXPECT_EQ(affine_patch_degree(s, 3), 4);
  // Nothing singular on the plane at infinity.
  auto inf = ideal_sum(s, make_ideal(ring, {w}));
  EXPECT_EQ(ideal_dimension(inf, true), -1);
  // The four nodes.
  for (auto pt : std::vector<std::vector<long>>{
           {1, 1, 1, 1}, {1, -1, -1, 1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}}) {
    std::vector<Rat> at;
    for (long c : pt) at.push_back(Rat(c));
    for (const auto& g : s.gens) EXPECT_TRUE(g.evaluate(at).is_zero());
  }
}

TEST(SingularLocus, PillowFourCorners) {
  auto ring = make_ring({"x", "y", "z"});
  PolyQ x = PolyQ::variable(ring, 0), y = PolyQ::variable(ring, 1),
        z = PolyQ::variable(ring, 2);
  PolyQ one = PolyQ::constant(ring, Rat(1));
  DenseMatrix<PolyQ> q(4, 4, PolyQ(ring));
  for (int i = 0; i < 4; ++i) q.at(i, i) = one;
  q.at(0, 1) = x;
  q.at(1, 0) = x;
  q.at(0, 3) = x;
  q.at(3, 0) = x;
  q.at(1, 2) = y;
  q.at(2, 1) = y;
  q.at(2, 3) = z;
  q.at(3, 2) = z;
  auto pillow = homogenize(q.det(), "w");
  auto v = projective_variety(make_ideal(pillow.ring(), {pillow}));
  auto s = singular_locus(v);

  int wvar = 3;
  auto sw = saturate(s, PolyQ::variable(pillow.ring(), wvar));
  EXPECT_EQ(ideal_dimension(sw, true), 0);
  EXPECT_EQ(affine_patch_degree(sw, wvar), 4);
  // All four corners satisfy 2x^2 = 1.
  auto gb = buchberger(ideal_sum(
      sw, make_ideal(pillow.ring(),
                     {PolyQ::variable(pillow.ring(), wvar) -
                      PolyQ::constant(pillow.ring(), Rat(1))})));
  PolyQ xx = PolyQ::variable(pillow.ring(), 0);
  PolyQ corner = xx * xx - PolyQ::constant(pillow.ring(), Rat(1, 2));
  EXPECT_TRUE(normal_form(corner, gb).is_zero());
}

TEST(Conormal, ConicPairingAndDimension) {
  auto conic = unit_conic();
  auto cn = conormal_ideal(conic, {"u0", "u1", "u2"});
  EXPECT_EQ(cn.n, 2);
  EXPECT_EQ(conormal_dimension(cn), 1);
  for (const auto& g : cn.ideal.gens) EXPECT_TRUE(bihomogeneous(g, 3));

  const auto& r2 = cn.ideal.ring;
  PolyQ pairing(r2);
  for (int i = 0; i < 3; ++i)
    pairing = pairing +
              PolyQ::variable(r2, i) * PolyQ::variable(r2, 3 + i);
  auto gb = buchberger(cn.ideal);
  EXPECT_TRUE(normal_form(pairing, gb).is_zero());
}

TEST(DualVariety, ConicInvertsTheMatrix) {
  auto d = dual_variety(unit_conic(), {"u0", "u1", "u2"});
  ASSERT_TRUE(d.principal);
  const auto& ur = d.ideal.ring;
  PolyQ u0 = PolyQ::variable(ur, 0), u1 = PolyQ::variable(ur, 1),
        u2 = PolyQ::variable(ur, 2);
  EXPECT_TRUE((d.generator - (u0 * u0 + u1 * u1 - u2 * u2)).is_zero());

  // diag(1, 2, -1) dualizes to diag(1, 1/2, -1).
  auto ring = make_ring({"x0", "x1", "x2"});
  PolyQ x0 = PolyQ::variable(ring, 0), x1 = PolyQ::variable(ring, 1),
        x2 = PolyQ::variable(ring, 2);
  auto v = projective_variety(
      make_ideal(ring, {x0 * x0 + x1 * x1 + x1 * x1 - x2 * x2}));
  auto dd = dual_variety(v, {"u0", "u1", "u2"});
  ASSERT_TRUE(dd.principal);
  const auto& ur2 = dd.ideal.ring;
  PolyQ w0 = PolyQ::variable(ur2, 0), w1 = PolyQ::variable(ur2, 1),
        w2 = PolyQ::variable(ur2, 2);
  EXPECT_TRUE(
      (dd.generator -
       (w0 * w0 + w1 * w1.scaled(Rat(1, 2)) - w2 * w2)).is_zero());
}

TEST(DualVariety, BidualityRoundTripConic) {
  auto conic = unit_conic();
  auto d1 = dual_variety(conic, {"u0", "u1", "u2"});
  ASSERT_TRUE(d1.principal);
  auto v2 = projective_variety(d1.ideal);
  auto d2 = dual_variety(v2, {"x0", "x1", "x2"});
  ASSERT_TRUE(d2.principal);
  EXPECT_TRUE(
      (d2.generator - map_by_names(conic.ideal.gens[0], d2.ideal.ring))
          .is_zero());
}

TEST(DualVariety, IndependentOfPresentation) {
  auto ring = make_ring({"x0", "x1", "x2"});
  PolyQ x0 = PolyQ::variable(ring, 0), x1 = PolyQ::variable(ring, 1),
        x2 = PolyQ::variable(ring, 2);
  PolyQ f = x0 * x0 + x1 * x1 - x2 * x2;
  auto d1 = dual_variety(projective_variety(make_ideal(ring, {f})));
  auto d2 = dual_variety(
      projective_variety(make_ideal(ring, {f.scaled(Rat(3)), (x0 + x1) * f})));
  ASSERT_TRUE(d1.principal);
  ASSERT_TRUE(d2.principal);
  EXPECT_TRUE((d1.generator - d2.generator).is_zero());
}

TEST(DualVariety, PlaneCurveDegreeFormula) {
  for (int d : {2, 3}) {
    auto dual = dual_variety(fermat_curve(d));
    ASSERT_TRUE(dual.principal);
    EXPECT_EQ(dual.generator.total_degree(), d * (d - 1));
  }
}

TEST(DualVariety, FermatQuarticDegreeTwelve) {
  auto cn = conormal_ideal(fermat_curve(4), {"u", "v", "w"});
  EXPECT_EQ(conormal_dimension(cn), 1);
  auto dual = dual_from_conormal(cn);
  ASSERT_TRUE(dual.principal);
  EXPECT_EQ(dual.generator.total_degree(), 12);

  // Slicing the dual at w = -1 recovers the polar-dual boundary curve of the
  // affine quartic ball.
  const auto& ur = dual.ideal.ring;
  PolyQ u = PolyQ::variable(ur, 0), v = PolyQ::variable(ur, 1);
  auto slice = dual.generator.substituted(
      {{2, PolyQ::constant(ur, Rat(-1))}});
  PolyQ f12 = ppow(u, 12) + (ppow(u, 8) * ppow(v, 4)).scaled(Rat(3)) +
              (ppow(u, 4) * ppow(v, 8)).scaled(Rat(3)) + ppow(v, 12) -
              ppow(u, 8).scaled(Rat(3)) +
              (ppow(u, 4) * ppow(v, 4)).scaled(Rat(21)) -
              ppow(v, 8).scaled(Rat(3)) + ppow(u, 4).scaled(Rat(3)) +
              ppow(v, 4).scaled(Rat(3)) -
              PolyQ::constant(ur, Rat(1));
  EXPECT_TRUE(proportional(slice, f12));
}

TEST(DualVariety, RationalNormalQuarticSylvesterSextic) {
  auto rnc = rational_normal_quartic();
  EXPECT_TRUE(is_smooth(rnc));
  auto cn = conormal_ideal(rnc, {"c0", "c1", "c2", "c3", "c4"});
  EXPECT_EQ(conormal_dimension(cn), 3);
  auto dual = dual_from_conormal(cn);
  ASSERT_TRUE(dual.principal);
  EXPECT_EQ(dual.generator.total_degree(), 6);

  // The resultant of f = c0 + c1 t + .. + c4 t^4 and f' carries one extra
  // factor of the leading coefficient over the discriminant.
  const auto& cr = dual.ideal.ring;
  std::vector<PolyQ> c;
  for (int i = 0; i < 5; ++i) c.push_back(PolyQ::variable(cr, i));
  std::vector<PolyQ> fc{c[0], c[1], c[2], c[3], c[4]};
  std::vector<PolyQ> dfc{c[1], c[2].scaled(Rat(2)), c[3].scaled(Rat(3)),
                         c[4].scaled(Rat(4))};
  auto res = sylvester_resultant(fc, dfc);
  auto disc = exact_divide(res, c[4]);
  ASSERT_TRUE(disc.has_value());
  EXPECT_TRUE(proportional(dual.generator, *disc));

  // The toric route through the Veronese exponent matrix agrees.
  auto ad = a_discriminant(veronese_matrix(2, 4));
  ASSERT_TRUE(ad.principal);
  EXPECT_EQ(ad.generator.total_degree(), 6);
  EXPECT_TRUE(
      proportional(map_by_names(ad.generator, cr), dual.generator));
}

TEST(Tangency, SmoothConicHasNoBitangents) {
  auto t = tangency_ideal(unit_conic());
  auto gb = buchberger(t);
  EXPECT_TRUE(
      ideal_contains(gb, PolyQ::constant(t.ring, Rat(1))));
}

TEST(Tangency, RejectsUnsupportedCounts) {
  EXPECT_THROW(tangency_ideal(unit_conic(), 1), math_error);
  EXPECT_THROW(tangency_ideal(unit_conic(), 4), math_error);
}

// 144(x^4 + y^4) - 225(x^2 + y^2) + 350 x^2 y^2 + 81, homogenized.
template <class K>
ProjectiveVarietyT<K> trott_curve(const RingPtr<K>& ring) {
  auto pw = [&](int var, int e) {
    auto p = Polynomial<K>::constant(ring, ring->one());
    for (int i = 0; i < e; ++i) p = p * Polynomial<K>::variable(ring, var);
    return p;
  };
  auto cst = [&](long v) {
    return Polynomial<K>::constant(ring, scalar_from_long(v, ring->one()));
  };
  auto f = cst(144) * (pw(0, 4) + pw(1, 4)) -
           cst(225) * (pw(0, 2) + pw(1, 2)) * pw(2, 2) +
           cst(350) * pw(0, 2) * pw(1, 2) + cst(81) * pw(2, 4);
  return projective_variety(make_ideal(ring, {f}));
}

// Columns of the coordinate change are chosen so no bitangent of the Trott
// curve lands on the new line at infinity.
template <class K>
long dehomogenized_count(const IdealT<K>& t, const std::vector<long>& m) {
  const auto& r = t.ring;
  std::map<int, Polynomial<K>> change;
  for (int i = 0; i < 3; ++i) {
    Polynomial<K> row(r);
    for (int j = 0; j < 3; ++j) {
      long mij = m[static_cast<size_t>(3 * i) + j];
      if (mij == 0) continue;
      row = row + Polynomial<K>::variable(r, j).scaled(
                      scalar_from_long(mij, r->one()));
    }
    change[i] = row;
  }
  std::vector<Polynomial<K>> gens;
  for (const auto& g : t.gens) gens.push_back(g.substituted(change));
  gens.push_back(Polynomial<K>::variable(r, 2) -
                 Polynomial<K>::constant(r, r->one()));
  return quotient_degree(make_ideal(r, std::move(gens)));
}

TEST(Tangency, TrottQuarticPrimeFieldCount) {
  budget::Guard guard(500'000'000);
  for (std::uint32_t p : {31991u, 32003u, 32009u}) {
    auto ring = make_fp_ring({"x", "y", "w"}, p);
    auto v = trott_curve<Fp>(ring);
    EXPECT_TRUE(is_smooth(v));
    auto t = tangency_ideal(v, 2);
    EXPECT_EQ(ideal_dimension(t, true), 0);
    long count = dehomogenized_count(t, {1, 0, 2, 0, 1, 3, 1, 1, 1});
    EXPECT_EQ(count, 28) << "p = " << p;
  }
}

TEST(Tangency, TrottQuarticRealBitangentsAndHull) {
  budget::Guard guard(500'000'000);
  auto ring = make_ring({"x", "y", "w"});
  auto v = trott_curve<Rat>(ring);
  auto t = tangency_ideal(v, 2);
  EXPECT_EQ(ideal_dimension(t, true), 0);

  // Generic-coordinate eliminant: the ratio of two generic linear forms
  // takes 28 distinct values on the dual points, and all of them are real.
  const auto& ur = t.ring;
  auto form = [&](long a, long b, long c) {
    return PolyQ::variable(ur, 0).scaled(Rat(a)) +
           PolyQ::variable(ur, 1).scaled(Rat(b)) +
           PolyQ::variable(ur, 2).scaled(Rat(c));
  };
  auto h = ratio_eliminant(t, form(7, 2, 5), form(2, 3, 1));
  EXPECT_EQ(h.degree(), 28);
  auto hsf = squarefree_part(h);
  EXPECT_EQ(hsf.degree(), 28);
  EXPECT_EQ(sturm_count(hsf), 28);

  // Bitangents of slope -1 and +1: ux = uy = 1 and ux = 1, uy = -1.  Their
  // intercepts are the roots +-sqrt((775 +- 7 sqrt(9889)) / 992) of mu; the
  // outer pair supports the convex hull at gamma ~ 1.2177.
  UPoly mu({Rat(117), Rat(0), Rat(-1550), Rat(0), Rat(992)});
  for (long sy : {1L, -1L}) {
    std::map<int, PolyQ> fix;
    fix[0] = PolyQ::constant(ur, Rat(1));
    fix[1] = PolyQ::constant(ur, Rat(sy));
    UPoly g;
    bool have = false;
    for (const auto& gen : t.gens) {
      auto sub = gen.substituted(fix);
      if (sub.is_zero()) continue;
      auto u = to_upoly(sub, 2);
      g = have ? gcd(g, u) : u;
      have = true;
    }
    ASSERT_TRUE(have);
    EXPECT_GE(g.degree(), 4);
    auto [q, rem] = divmod(g, mu);
    EXPECT_TRUE(rem.is_zero()) << "slope " << (sy > 0 ? "-1" : "+1");
  }

  // The largest root of mu is the hull intercept.
  auto roots = isolate_real_roots(mu);
  ASSERT_EQ(roots.size(), 4u);
  auto wide = roots.back();
  Rat gamma = refine_root(mu, wide.first, wide.second, Rat(1, 100000000));
  double val = gamma.to_double();
  EXPECT_NEAR(val, 1.2177, 1e-4);
}

TEST(ToricMatrixChecks, ValidatesRankAndRowSpace) {
  auto a = veronese_matrix(2, 4);
  EXPECT_EQ(a.d, 2);
  EXPECT_EQ(a.cols, 5);
  std::vector<long> want{4, 3, 2, 1, 0, 0, 1, 2, 3, 4};
  EXPECT_EQ(a.entries, want);

  EXPECT_THROW(toric_matrix(2, 2, {1, 1, 2, 2}), math_error);  // rank 1
  EXPECT_THROW(toric_matrix(1, 2, {1, 2}), math_error);  // ones not in span
  EXPECT_THROW(toric_matrix(2, 3, {1, 1}), math_error);  // bad shape
}

TEST(ADiscriminant, BinaryQuadratic) {
  auto ad = a_discriminant(toric_matrix(2, 3, {2, 1, 0, 0, 1, 2}));
  ASSERT_TRUE(ad.principal);
  const auto& cr = ad.ideal.ring;
  PolyQ c0 = PolyQ::variable(cr, 0), c1 = PolyQ::variable(cr, 1),
        c2 = PolyQ::variable(cr, 2);
  EXPECT_TRUE(proportional(ad.generator,
                           c1 * c1 - (c0 * c2).scaled(Rat(4))));
}

}  // namespace
}  // namespace cvxdual
