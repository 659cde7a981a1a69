#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "cvxdual/matrix.hpp"
#include "cvxdual/poly.hpp"
#include "cvxdual/rng.hpp"

namespace cvxdual {
namespace {

using PolyQ = Polynomial<Rat>;

PolyQ ppow(PolyQ base, int e) {
  PolyQ r = PolyQ::constant(base.ring(), Rat(1));
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

struct XY {
  RingPtr<Rat> ring = make_ring({"x", "y"});
  PolyQ x = PolyQ::variable(ring, 0);
  PolyQ y = PolyQ::variable(ring, 1);
  PolyQ c(long v) const { return PolyQ::constant(ring, Rat(v)); }
};

TEST(PolyArith, ProductsAndIdentity) {
  XY r;
  EXPECT_EQ((r.x + r.y) * (r.x - r.y), r.x * r.x - r.y * r.y);
  PolyQ p = r.x * r.y - r.c(5) * r.x + r.c(1);
  EXPECT_EQ(p + PolyQ(r.ring), p);
  EXPECT_EQ(p - p, PolyQ(r.ring));
}

TEST(PolyArith, BicuspidExpansion) {
  XY r;
  PolyQ bicuspid = (r.x * r.x - r.c(1)) * ppow(r.x - r.c(1), 2) +
                   ppow(r.y * r.y - r.c(1), 2);
  // x^4 - 2x^3 + y^4 - 2y^2 + 2x
  PolyQ expected = ppow(r.x, 4) - r.c(2) * ppow(r.x, 3) + ppow(r.y, 4) -
                   r.c(2) * ppow(r.y, 2) + r.c(2) * r.x;
  EXPECT_EQ(bicuspid, expected);
}

TEST(PolyArith, RandomRingProperties) {
  auto ring = make_ring({"x", "y", "z"});
  Rng rng(21);
  auto rand_poly = [&] {
    std::vector<Term<Rat>> ts;
    int nt = 1 + static_cast<int>(rng.next_below(6));
    for (int i = 0; i < nt; ++i) {
      Mono m = Mono::from_exponents({static_cast<int>(rng.next_below(3)),
                                     static_cast<int>(rng.next_below(3)),
                                     static_cast<int>(rng.next_below(2))});
      ts.push_back({m, Rat(static_cast<long>(rng.next_below(13)) - 6)});
    }
    return PolyQ::from_terms(ring, Order::grevlex(), std::move(ts));
  };
  for (int trial = 0; trial < 50; ++trial) {
    PolyQ a = rand_poly(), b = rand_poly(), c = rand_poly();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    // canonical idempotence
    std::vector<Term<Rat>> copy(a.terms());
    EXPECT_EQ(PolyQ::from_terms(ring, a.order(), std::move(copy)), a);
    if (!b.is_zero()) EXPECT_EQ(div_exact(a * b, b), a);
  }
}

TEST(PolyDerivative, BasicsAndCommutation) {
  XY r;
  PolyQ p = ppow(r.x, 4) + ppow(r.y, 4) - r.c(1);
  EXPECT_EQ(p.derivative(0), r.c(4) * ppow(r.x, 3));
  EXPECT_EQ(r.c(7).derivative(0), PolyQ(r.ring));
  Rng rng(31);
  auto ring3 = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Term<Rat>> ts;
    for (int i = 0; i < 5; ++i)
      ts.push_back({Mono::from_exponents({static_cast<int>(rng.next_below(4)),
                                          static_cast<int>(rng.next_below(4)),
                                          static_cast<int>(rng.next_below(4))}),
                    Rat(static_cast<long>(rng.next_below(9)) - 4)});
    auto p3 = Polynomial<Rat>::from_terms(ring3, Order::grevlex(),
                                          std::move(ts));
    EXPECT_EQ(p3.derivative(0).derivative(1), p3.derivative(1).derivative(0));
  }
}

TEST(PolyDerivative, PillowDeterminantGradientAtCenter) {
  auto ring = make_ring({"x", "y", "z"});
  PolyQ x = PolyQ::variable(ring, 0), y = PolyQ::variable(ring, 1),
        z = PolyQ::variable(ring, 2);
  PolyQ one = PolyQ::constant(ring, Rat(1));
  DenseMatrix<PolyQ> q(4, 4, PolyQ(ring));
  PolyQ zero(ring);
  PolyQ grid[4][4] = {{one, x, zero, x},
                      {x, one, y, zero},
                      {zero, y, one, z},
                      {x, zero, z, one}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) q.at(i, j) = grid[i][j];
  PolyQ det = q.det();
  PolyQ expected =
      x * x * (y - z) * (y - z) - Rat(2) * x * x - y * y - z * z + one;
  EXPECT_EQ(det, expected);
  std::vector<Rat> origin = {Rat(0), Rat(0), Rat(0)};
  for (int v = 0; v < 3; ++v)
    EXPECT_EQ(det.derivative(v).evaluate(origin), Rat(0));
}

TEST(PolyDivide, ExactAndNotDivisible) {
  XY r;
  auto q = exact_divide(r.x * r.x - r.y * r.y, r.x - r.y);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, r.x + r.y);
  EXPECT_FALSE(exact_divide(r.x * r.x + r.y * r.y, r.x - r.y).has_value());
  EXPECT_THROW(div_exact(r.x, PolyQ(r.ring)), math_error);
}

TEST(PolyHomogenize, RoundTripAndExamples) {
  XY r;
  PolyQ p = ppow(r.x, 4) + ppow(r.y, 4) - r.c(1);
  PolyQ h = homogenize(p, "z");
  auto ring3 = h.ring();
  ASSERT_EQ(ring3->arity(), 3);
  PolyQ hx = PolyQ::variable(ring3, 0), hy = PolyQ::variable(ring3, 1),
        hz = PolyQ::variable(ring3, 2);
  EXPECT_EQ(h, ppow(hx, 4) + ppow(hy, 4) - ppow(hz, 4));
  EXPECT_TRUE(h.is_homogeneous());
  // Dehomogenizing at z recovers p (up to the ring extension).
  PolyQ back = dehomogenize(h, 2);
  EXPECT_EQ(back, map_by_names(p, ring3));
  EXPECT_THROW(homogenize(p, "x"), math_error);
}

TEST(PolyHomogenize, HomogeneousRoundTrip) {
  XY r;
  // p homogeneous, not divisible by the new variable: round trip is identity.
  PolyQ p = ppow(r.x, 2) + r.x * r.y + ppow(r.y, 2);
  PolyQ h = homogenize(p, "w");
  EXPECT_EQ(h, map_by_names(p, h.ring()));
}

TEST(PolySubstitute, ScalarsAndPillowQuadric) {
  XY r;
  PolyQ p = r.x * r.x + r.y * r.y;
  EXPECT_EQ(p.evaluate({Rat(3), Rat(4)}), Rat(25));

  // Corner quadric of the dual pillow at (a,b,c) = (1,0,0).
  auto ring = make_ring({"lambda", "a", "b", "c"});
  PolyQ l = PolyQ::variable(ring, 0), a = PolyQ::variable(ring, 1),
        b = PolyQ::variable(ring, 2), cc = PolyQ::variable(ring, 3);
  PolyQ quad = Rat(2) * l * l - a * a + Rat(2) * a * b - b * b +
               Rat(2) * b * cc - cc * cc - Rat(2) * a * cc;
  std::map<int, PolyQ> assign = {{1, PolyQ::constant(ring, Rat(1))},
                                 {2, PolyQ::constant(ring, Rat(0))},
                                 {3, PolyQ::constant(ring, Rat(0))}};
  PolyQ spec = quad.substituted(assign);
  EXPECT_EQ(spec, Rat(2) * l * l - PolyQ::constant(ring, Rat(1)));
}

TEST(PolySubstitute, PolynomialTargets) {
  XY r;
  // x -> x+y, y -> x-y inside x^2 - y^2 gives 4xy.
  PolyQ p = r.x * r.x - r.y * r.y;
  std::map<int, PolyQ> assign = {{0, r.x + r.y}, {1, r.x - r.y}};
  EXPECT_EQ(p.substituted(assign), Rat(4) * r.x * r.y);
}

TEST(MonomialOrder, AxiomsOnRandomTriples) {
  Rng rng(77);
  int arity = 4;
  std::vector<Order> orders = {Order::lex(), Order::grevlex(),
                               Order::block(2)};
  auto rand_mono = [&] {
    std::vector<int> e(arity);
    for (int& v : e) v = static_cast<int>(rng.next_below(5));
    return Mono::from_exponents(e);
  };
  for (const auto& ord : orders) {
    for (int trial = 0; trial < 200; ++trial) {
      Mono a = rand_mono(), b = rand_mono(), c = rand_mono();
      int ab = cmp_mono(a, b, ord, arity);
      int ba = cmp_mono(b, a, ord, arity);
      EXPECT_EQ(ab, -ba);
      EXPECT_EQ(ab == 0, a == b);
      // multiplicativity
      EXPECT_EQ(cmp_mono(a * c, b * c, ord, arity), ab);
      // 1 is the minimum
      if (!a.is_one()) EXPECT_GT(cmp_mono(a, Mono::one(), ord, arity), 0);
      // transitivity spot check
      int bc = cmp_mono(b, c, ord, arity);
      if (ab > 0 && bc > 0) EXPECT_GT(cmp_mono(a, c, ord, arity), 0);
    }
  }
}

TEST(MonomialOrder, BlockSeparation) {
  // block(1) on (t, x): any monomial containing t beats any t-free one.
  Order ord = Order::block(1);
  Mono t = Mono::var(0), x5 = Mono::var(1, 5);
  EXPECT_GT(cmp_mono(t, x5, ord, 2), 0);
}

TEST(PolyRender, CanonicalStyle) {
  XY r;
  PolyQ p = Rat(513, 7) * r.x * r.x * r.y - r.c(3);
  EXPECT_EQ(p.str(), "513/7*x^2*y - 3");
  EXPECT_EQ(PolyQ(r.ring).str(), "0");
  EXPECT_EQ((-r.x).str(), "-x");
  EXPECT_EQ((r.x - r.y).str(), "x - y");
  EXPECT_EQ((r.x * r.y + r.c(1)).str(), "x*y + 1");
}

TEST(SymbolicDet, DistanceMatrixBoundaryFactors) {
  // Schoenberg matrix of six cyclically arranged points with unit nearest
  // and 8/3 next-nearest squared distances; the three long diagonals are the
  // unknowns.  Base point 1, rows and columns indexed by points 2..6.
  auto ring = make_ring({"x", "y", "z"});
  PolyQ x = PolyQ::variable(ring, 0), y = PolyQ::variable(ring, 1),
        z = PolyQ::variable(ring, 2);
  auto c = [&](long n, long d) { return PolyQ::constant(ring, Rat(n, d)); };
  DenseMatrix<PolyQ> m(5, 5, PolyQ(ring));
  PolyQ e[5][5] = {
      {c(2, 1), c(8, 3), x - c(5, 3), c(11, 3) - y, c(-2, 3)},
      {c(8, 3), c(16, 3), x + c(5, 3), c(8, 3), c(11, 3) - z},
      {x - c(5, 3), x + c(5, 3), Rat(2) * x, x + c(5, 3), x - c(5, 3)},
      {c(11, 3) - y, c(8, 3), x + c(5, 3), c(16, 3), c(8, 3)},
      {c(-2, 3), c(11, 3) - z, x - c(5, 3), c(8, 3), c(2, 1)}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m.at(i, j) = e[i][j];
  PolyQ det = m.det();
  PolyQ f = Rat(27) * x * y * z - Rat(75) * x - Rat(75) * y - Rat(75) * z -
            c(250, 1);
  PolyQ g = Rat(3) * x * y + Rat(3) * x * z + Rat(3) * y * z - Rat(22) * x -
            Rat(22) * y - Rat(22) * z + c(121, 1);
  EXPECT_EQ(det, c(2, 81) * f * g);
}

TEST(SymbolicDet, QuarticDiscriminantMatchesSylvesterTable) {
  auto ring = make_ring({"c0", "c1", "c2", "c3", "c4"});
  std::vector<PolyQ> c;
  for (int i = 0; i < 5; ++i) c.push_back(PolyQ::variable(ring, i));
  PolyQ zero(ring);
  // 7x7 table: three shifted coefficient rows, four shifted derivative rows.
  std::vector<std::vector<PolyQ>> rows;
  for (int s = 0; s < 3; ++s) {
    std::vector<PolyQ> row(7, zero);
    for (int j = 0; j < 5; ++j) row[s + j] = c[j];
    rows.push_back(row);
  }
  for (int s = 0; s < 4; ++s) {
    std::vector<PolyQ> row(7, zero);
    for (int j = 1; j < 5; ++j) row[s + j - 1] = Rat(j) * c[j];
    rows.push_back(row);
  }
  DenseMatrix<PolyQ> m(7, 7, zero);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m.at(i, j) = rows[i][j];
  PolyQ table_det = m.det();

  std::vector<PolyQ> coeffs(c.begin(), c.end());
  PolyQ disc = discriminant_from_coeffs(coeffs);
  EXPECT_EQ(disc, div_exact(table_det, c[4]));
}

TEST(SymbolicDisc, QuadraticFormula) {
  auto ring = make_ring({"a", "b", "c"});
  PolyQ a = PolyQ::variable(ring, 0), b = PolyQ::variable(ring, 1),
        c = PolyQ::variable(ring, 2);
  std::vector<PolyQ> p = {c, b, a};  // a t^2 + b t + c
  EXPECT_EQ(discriminant_from_coeffs(p), b * b - Rat(4) * a * c);
}

TEST(PolyDomains, FpAndConversions) {
  std::uint32_t p = 101;
  auto fring = make_fp_ring({"x", "y"}, p);
  auto fx = Polynomial<Fp>::variable(fring, 0);
  auto fy = Polynomial<Fp>::variable(fring, 1);
  auto prod = (fx + fy) * (fx - fy);
  EXPECT_EQ(prod, fx * fx - fy * fy);
  // 101 * x collapses to zero mod 101.
  auto zero = Polynomial<Fp>::constant(fring, Fp(101, p)) * fx;
  EXPECT_TRUE(zero.is_zero());

  auto qring = make_ring({"x", "y"});
  PolyQ q = Rat(1, 3) * PolyQ::variable(qring, 0) +
            PolyQ::constant(qring, Rat(7, 2));
  auto fq = to_fp_poly(q, fring);
  // 1/3 = 34 mod 101, 7/2 = 54 mod 101.
  EXPECT_EQ(fq, Fp(34, p) * fx + Polynomial<Fp>::constant(fring, Fp(54, p)));
}

TEST(PolyDomains, RingMismatchThrows) {
  XY r;
  // Structurally identical rings are interchangeable.
  auto twin = make_ring({"x", "y"});
  EXPECT_NO_THROW(r.x + PolyQ::variable(twin, 0));
  // Genuinely different rings are not.
  auto other = make_ring({"u", "v"});
  PolyQ b = PolyQ::variable(other, 0);
  EXPECT_THROW(r.x + b, math_error);
}

}  // namespace
}  // namespace cvxdual
