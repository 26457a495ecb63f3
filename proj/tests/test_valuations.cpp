#include "tenval/valuations.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "tenval/moments.hpp"

namespace tenval {
namespace {

VecQ v2(const Rat& a, const Rat& b) { return VecQ{a, b}; }
VecQ v3(const Rat& a, const Rat& b, const Rat& c) { return VecQ{a, b, c}; }

Tensor<Rat> mat2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  return Tensor<Rat>(2, 2, {a, b, c, d});
}

Polytope square_pm1() {
  return Polytope::hull(2, {v2(-1, -1), v2(1, -1), v2(1, 1), v2(-1, 1)});
}

Polytope far_square() {
  return Polytope::hull(2, {v2(1, 1), v2(2, 1), v2(2, 2), v2(1, 2)});
}

// Pentagon with the origin in its interior.
Polytope pentagon() {
  return Polytope::hull(2, {v2(2, 0), v2(0, 2), v2(-2, 1), v2(-1, -2), v2(1, -2)});
}

// Triangle whose image under the quarter turn has the origin strictly inside
// one edge.
Polytope edge_origin_triangle() {
  return Polytope::hull(2, {v2(-1, 0), v2(2, 0), v2(0, 1)});
}

Tensor<Rat> all_ones(int n, int p) {
  Tensor<Rat> t(n, p);
  for (std::size_t f = 0; f < t.size(); ++f) t[f] = Rat(1);
  return t;
}

void expect_close(const Tensor<Rat>& exact, const Tensor<double>& approx, double tol) {
  ASSERT_EQ(exact.size(), approx.size());
  for (std::size_t f = 0; f < exact.size(); ++f) {
    EXPECT_NEAR(to_double(exact[f]), approx[f], tol) << "component " << f;
  }
}

TEST(CoefFn, LinearPowerTableExact) {
  const CoefFn zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero(Rat(7, 3)), Rat(0));

  const CoefFn lin = CoefFn::linear(Rat(3));
  EXPECT_TRUE(lin.is_linear());
  EXPECT_FALSE(lin.is_zero());
  EXPECT_EQ(lin(Rat(2)), Rat(6));
  EXPECT_EQ(lin(Rat(-2)), Rat(-6));
  EXPECT_EQ(lin(Rat(0)), Rat(0));

  const CoefFn pow32 = CoefFn::power(Rat(2), Rat(3, 2));
  EXPECT_EQ(pow32(Rat(4)), Rat(16));          // 2 * 4^{3/2}
  EXPECT_EQ(pow32(Rat(1, 4)), Rat(1, 4));     // 2 * (1/4)^{3/2}
  EXPECT_EQ(pow32(Rat(-4)), Rat(-16));        // odd extension
  EXPECT_THROW(pow32(Rat(2)), std::domain_error);
  EXPECT_THROW(CoefFn::power(Rat(1), Rat(0)), std::invalid_argument);
  EXPECT_THROW(CoefFn::power(Rat(1), Rat(-1)), std::invalid_argument);

  std::map<Rat, Rat, RatLess> grid;
  grid[Rat(1)] = Rat(5);
  grid[Rat(2)] = Rat(7);
  const CoefFn tab = CoefFn::table(grid);
  EXPECT_EQ(tab(Rat(1)), Rat(5));
  EXPECT_EQ(tab(Rat(-2)), Rat(-7));
  EXPECT_EQ(tab(Rat(0)), Rat(0));
  EXPECT_THROW(tab(Rat(3)), std::out_of_range);

  std::map<Rat, Rat, RatLess> bad;
  bad[Rat(-1)] = Rat(1);
  EXPECT_THROW(CoefFn::table(bad), std::invalid_argument);
  std::map<Rat, Rat, RatLess> bad0;
  bad0[Rat(0)] = Rat(1);
  EXPECT_THROW(CoefFn::table(bad0), std::invalid_argument);
}

TEST(CoefFn, FloatingPath) {
  const CoefFn lin = CoefFn::linear(Rat(3, 2));
  EXPECT_DOUBLE_EQ(lin(2.0), 3.0);
  EXPECT_DOUBLE_EQ(lin(-2.0), -3.0);
  const CoefFn pw = CoefFn::power(Rat(2), Rat(3, 2));
  EXPECT_NEAR(pw(4.0), 16.0, 1e-12);
  EXPECT_NEAR(pw(2.0), 2.0 * std::pow(2.0, 1.5), 1e-12);
  std::map<Rat, Rat, RatLess> grid;
  grid[Rat(1)] = Rat(5);
  const CoefFn tab = CoefFn::table(grid);
  EXPECT_THROW(tab(1.0), std::logic_error);
}

// Every component of the facet-normal valuation on sT^n equals
// s^{-p} zeta(s^n/n!): only the non-coordinate facet survives, its primitive
// normal is the all-ones vector, support s, cone volume the simplex volume.
TEST(ValSym, ScaledSimplexClosedForm) {
  const Rat c(7, 5);
  const CoefFn zeta = CoefFn::linear(c);
  for (int n = 2; n <= 4; ++n) {
    Rat nfact(1);
    for (int k = 2; k <= n; ++k) nfact *= k;
    for (const Rat& s : {Rat(1, 2), Rat(1), Rat(2)}) {
      for (int p = 0; p <= n; ++p) {
        const Polytope P = Polytope::standard_simplex(n, n, s);
        Rat sp(1);
        for (int k = 0; k < p; ++k) sp *= s;
        // zeta(s^n/n!) / s^p
        Rat spow(1);
        for (int k = 0; k < n; ++k) spow *= s;
        const Rat expect = c * (spow / nfact) / sp;
        const Tensor<Rat> got = val_sym<Rat>(P, p, zeta);
        EXPECT_EQ(got, expect * all_ones(n, p)) << "n=" << n << " p=" << p;
      }
    }
  }
}

TEST(ValSym, VanishesOnLowerDimensionalBodies) {
  // A segment in the plane, off the origin: the two side records cancel.
  const Polytope seg = Polytope::hull(2, {v2(1, 0), v2(1, 1)});
  EXPECT_TRUE(val_sym<Rat>(seg, 1, CoefFn::linear(Rat(1))).is_zero());
  EXPECT_TRUE(val_sym<Rat>(seg, 2, CoefFn::linear(Rat(1))).is_zero());
  // A triangle in an affine plane of R^3.
  const Polytope tri = Polytope::hull(3, {v3(1, 0, 1), v3(0, 1, 1), v3(-1, -1, 1)});
  EXPECT_TRUE(val_sym<Rat>(tri, 2, CoefFn::linear(Rat(3, 2))).is_zero());
  EXPECT_TRUE(val_sym<Rat>(tri, 3, CoefFn::power(Rat(1), Rat(3))).is_zero());
}

TEST(ValSym, FrozenSquareValues) {
  const Polytope sq = square_pm1();
  // Four facets, unit support, unit cone volume each; normals ±e1, ±e2.
  EXPECT_EQ(val_sym<Rat>(sq, 2, CoefFn::linear(Rat(1))),
            mat2(Rat(2), Rat(0), Rat(0), Rat(2)));
  EXPECT_EQ(val_sym<Rat>(sq, 2, CoefFn::power(Rat(3), Rat(2))),
            mat2(Rat(6), Rat(0), Rat(0), Rat(6)));
  std::map<Rat, Rat, RatLess> grid;
  grid[Rat(1)] = Rat(3);
  EXPECT_EQ(val_sym<Rat>(sq, 2, CoefFn::table(grid)), mat2(Rat(6), Rat(0), Rat(0), Rat(6)));
  // Odd order: opposite normals cancel.
  EXPECT_TRUE(val_sym<Rat>(sq, 1, CoefFn::linear(Rat(1))).is_zero());
}

// The planar cross tensor of a vector is its quarter turn, so the moment
// cross valuation must agree with the moment vector of the rotated body.
TEST(ValCrossMoment, MatchesRotatedMomentVectorInThePlane) {
  for (const Polytope& P : {far_square(), pentagon(), edge_origin_triangle()}) {
    const Tensor<Rat> got = val_cross_moment<Rat>(P, Rat(1));
    const VecQ m = moment_vector<Rat>(P.transform(planar_rotation()));
    ASSERT_EQ(got.order(), 1);
    EXPECT_EQ(got.at({0}), m[0]);
    EXPECT_EQ(got.at({1}), m[1]);
  }
}

// Every component of the moment cross valuation on sT^n is
// s^{n+1}/(n+1)! times the corresponding contracted Levi-Civita entry.
TEST(ValCrossMoment, ScaledSimplexClosedForm) {
  for (int n = 2; n <= 4; ++n) {
    Rat fact(1);
    for (int k = 2; k <= n + 1; ++k) fact *= k;
    for (const Rat& s : {Rat(1, 2), Rat(2)}) {
      Rat spow(1);
      for (int k = 0; k <= n; ++k) spow *= s;
      const Polytope P = Polytope::standard_simplex(n, n, s);
      const Tensor<Rat> got = val_cross_moment<Rat>(P, Rat(1));
      const VecT<Rat> ones(n, Rat(1));
      Tensor<Rat> expect = cross_tensor<Rat>(ones);
      expect *= spow / fact;
      EXPECT_EQ(got, expect) << "n=" << n;
    }
  }
  // Frozen 3d instance: antisymmetric pattern scaled by 1/24.
  const Tensor<Rat> t3 = val_cross_moment<Rat>(Polytope::standard_simplex(3, 3, Rat(1)), Rat(1));
  EXPECT_EQ(t3.at({0, 1}), Rat(1, 24));
  EXPECT_EQ(t3.at({1, 0}), Rat(-1, 24));
  EXPECT_EQ(t3.at({0, 2}), Rat(-1, 24));
  EXPECT_EQ(t3.at({0, 0}), Rat(0));
}

TEST(ValFacetCross, SquareGivesVolumeTimesEpsilon) {
  const Polytope sq = square_pm1();
  Tensor<Rat> eps = levi_civita<Rat>(2);
  Tensor<Rat> expect = eps;
  expect *= Rat(4);
  EXPECT_EQ(val_facet_cross<Rat>(sq, FacetScope::All, 0, Rat(1)), expect);
  // No facet hyperplane passes through the origin, so the scopes agree.
  EXPECT_EQ(val_facet_cross<Rat>(sq, FacetScope::OriginAvoiding, 0, Rat(1)), expect);
  // A one-step slot shift on an order-2 tensor is the transpose.
  Tensor<Rat> neg = expect;
  neg *= Rat(-1);
  EXPECT_EQ(val_facet_cross<Rat>(sq, FacetScope::All, 1, Rat(1)), neg);
}

TEST(ValFacetCross, SimplexScopes) {
  const Polytope T3 = Polytope::standard_simplex(3, 3, Rat(1));
  // All facets: volume times the Levi-Civita tensor.
  Tensor<Rat> eps = levi_civita<Rat>(3);
  eps *= Rat(1, 6);
  EXPECT_EQ(val_facet_cross<Rat>(T3, FacetScope::All, 0, Rat(1)), eps);
  // Origin-avoiding facets: only the diagonal one, with centroid (1/3)·1 and
  // area vector (1/2)·1.
  const Tensor<Rat> got = val_facet_cross<Rat>(T3, FacetScope::OriginAvoiding, 0, Rat(1));
  EXPECT_EQ(got.at({0, 1, 0}), Rat(1, 6));
  EXPECT_EQ(got.at({0, 1, 1}), Rat(1, 6));
  EXPECT_EQ(got.at({1, 0, 2}), Rat(-1, 6));
  EXPECT_EQ(got.at({2, 1, 1}), Rat(-1, 6));
  EXPECT_EQ(got.at({0, 0, 0}), Rat(0));
  EXPECT_EQ(got.at({1, 1, 2}), Rat(0));
}

TEST(ValFacetCross, VanishesOnLowerDimensionalBodies) {
  const Polytope seg = Polytope::hull(2, {v2(1, 0), v2(1, 1)});
  EXPECT_TRUE(val_facet_cross<Rat>(seg, FacetScope::All, 0, Rat(1)).is_zero());
  EXPECT_TRUE(val_facet_cross<Rat>(seg, FacetScope::OriginAvoiding, 0, Rat(1)).is_zero());
  const Polytope tri = Polytope::hull(3, {v3(1, 0, 1), v3(0, 1, 1), v3(-1, -1, 1)});
  EXPECT_TRUE(val_facet_cross<Rat>(tri, FacetScope::All, 1, Rat(2)).is_zero());
  EXPECT_TRUE(val_facet_cross<Rat>(tri, FacetScope::OriginAvoiding, 0, Rat(1)).is_zero());
}

TEST(ValEuler, CoefficientCases) {
  const Rat cr(3), cc(5), co(7);
  const CoefFn eta = CoefFn::linear(Rat(11));
  const auto coeff_of = [&](const Polytope& P) {
    const Tensor<Rat> z = val_euler<Rat>(P, cr, cc, co, eta);
    return z.at({0, 1});  // epsilon_{12} = 1 component
  };
  const Polytope origin = Polytope::point(VecQ{Rat(0), Rat(0)});
  EXPECT_EQ(coeff_of(origin), cr + cc + co);
  // o a vertex, 1 <= d <= n-1: only the constant and membership terms.
  EXPECT_EQ(coeff_of(Polytope::standard_simplex(2, 1, Rat(2))), cc + co);
  // Full-dimensional simplex: adds eta(volume).
  EXPECT_EQ(coeff_of(Polytope::standard_simplex(2, 2, Rat(2))), cc + co + Rat(11) * Rat(2));
  // o interior, even dimension: the relint term enters with +1.
  EXPECT_EQ(coeff_of(square_pm1()), cr + cc + co + Rat(11) * Rat(4));
  // o strictly inside a segment: odd dimension flips the relint term.
  EXPECT_EQ(coeff_of(Polytope::hull(2, {v2(-1, 0), v2(1, 0)})), -cr + cc + co);
  // o not in P: only the constant and volume terms.
  EXPECT_EQ(coeff_of(far_square()), cc + Rat(11) * Rat(1));
  // Empty input: zero tensor.
  EXPECT_TRUE(val_euler<Rat>(Polytope::empty(2), cr, cc, co, eta).is_zero());
  // Higher dimension, o in the relative interior of a flat body: dim = 2
  // keeps the +1 sign and the n-volume vanishes.
  const Polytope flat =
      Polytope::hull(3, {v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0), v3(0, -1, 0)});
  const Tensor<Rat> z = val_euler<Rat>(flat, cr, cc, co, eta);
  EXPECT_EQ(z.at({0, 1, 2}), cr + cc + co);
}

TEST(ValPlanarMoment, RotatedSimplexDisplay) {
  for (const Rat& s : {Rat(1), Rat(2), Rat(1, 2)}) {
    Rat s4(1);
    for (int k = 0; k < 4; ++k) s4 *= s;
    const Rat w = s4 / 24;
    const Tensor<Rat> expect =
        mat2(2 * w, -w, -w, 2 * w);
    EXPECT_EQ(val_planar_moment<Rat>(Polytope::standard_simplex(2, 2, s), Rat(1)), expect);
    Tensor<Rat> scaled = expect;
    scaled *= Rat(5, 3);
    EXPECT_EQ(val_planar_moment<Rat>(Polytope::standard_simplex(2, 2, s), Rat(5, 3)), scaled);
  }
}

TEST(ValTheta, ClosedForms) {
  const Rat one(1);
  // Order 2 on the rotated simplex: s^2 times the identity.
  for (const Rat& s : {Rat(1), Rat(3), Rat(1, 2)}) {
    const Polytope P = Polytope::standard_simplex(2, 2, s);
    EXPECT_EQ(val_theta<Rat>(P, 2, true, one), mat2(s * s, Rat(0), Rat(0), s * s));
    // Order 1: s (e1 - e2).
    const Tensor<Rat> t1 = val_theta<Rat>(P, 1, true, one);
    EXPECT_EQ(t1.at({0}), s);
    EXPECT_EQ(t1.at({1}), -s);
    // Order 3: s^3 (e1^3 - e2^3).
    const Tensor<Rat> t3 = val_theta<Rat>(P, 3, true, one);
    EXPECT_EQ(t3.at({0, 0, 0}), s * s * s);
    EXPECT_EQ(t3.at({1, 1, 1}), -(s * s * s));
    EXPECT_EQ(t3.at({0, 0, 1}), Rat(0));
  }
  // Segment from the origin: both boundary points count twice.
  const Polytope seg = Polytope::standard_simplex(2, 1, Rat(3));
  EXPECT_EQ(val_theta<Rat>(seg, 2, true, one), mat2(Rat(0), Rat(0), Rat(0), Rat(18)));
  // No rotation: a square with the origin in the middle of its bottom edge.
  const Polytope sq = Polytope::hull(2, {v2(-1, 0), v2(1, 0), v2(1, 2), v2(-1, 2)});
  EXPECT_EQ(val_theta<Rat>(sq, 2, false, one), mat2(Rat(2), Rat(0), Rat(0), Rat(0)));
  // Scaling coefficient.
  EXPECT_EQ(val_theta<Rat>(sq, 2, false, Rat(-3, 2)), mat2(Rat(-3), Rat(0), Rat(0), Rat(0)));
  // Zero cases: origin interior, origin outside, a point, the empty set.
  EXPECT_TRUE(val_theta<Rat>(square_pm1(), 2, true, one).is_zero());
  EXPECT_TRUE(val_theta<Rat>(far_square(), 2, true, one).is_zero());
  EXPECT_TRUE(val_theta<Rat>(Polytope::point(VecQ{Rat(0), Rat(0)}), 2, true, one).is_zero());
  EXPECT_TRUE(val_theta<Rat>(Polytope::empty(2), 2, true, one).is_zero());
}

TEST(ValThetaVisible, HullOfVisibleVertices) {
  // Segment between the basis vectors: its hull with o is the unit simplex.
  const Polytope seg = Polytope::hull(2, {v2(1, 0), v2(0, 1)});
  EXPECT_EQ(val_theta_visible<Rat>(seg, 2, Rat(1)), mat2(Rat(1), Rat(0), Rat(0), Rat(1)));
  // A far square: three visible vertices, one absorbed into the hull.
  const Tensor<Rat> got = val_theta_visible<Rat>(far_square(), 2, Rat(1));
  EXPECT_EQ(got, mat2(Rat(5), Rat(-4), Rat(-4), Rat(5)));
  // Scaled by b.
  Tensor<Rat> scaled = mat2(Rat(5), Rat(-4), Rat(-4), Rat(5));
  scaled *= Rat(2, 7);
  EXPECT_EQ(val_theta_visible<Rat>(far_square(), 2, Rat(2, 7)), scaled);
  // Origin inside P: no visible vertices, the hull degenerates to {o}.
  EXPECT_TRUE(val_theta_visible<Rat>(square_pm1(), 2, Rat(1)).is_zero());
  EXPECT_TRUE(val_theta_visible<Rat>(Polytope::empty(2), 2, Rat(1)).is_zero());
}

TEST(ValBoundaryWalk, PointAndSegments) {
  const std::array<Rat, 5> d{Rat(2, 3), Rat(5, 7), Rat(-3, 2), Rat(4, 5), Rat(7, 11)};
  const CoefFn zt = CoefFn::linear(Rat(11, 5));
  const CoefFn et = CoefFn::linear(Rat(-2, 9));
  // The origin alone.
  Tensor<Rat> eps = levi_civita<Rat>(2);
  Tensor<Rat> expect = eps;
  expect *= -d[0];
  EXPECT_EQ(val_boundary_walk<Rat>(Polytope::point(VecQ{Rat(0), Rat(0)}), d, zt, et), expect);
  // Segment from the origin, length s: 2 d1 s^2 e2^2 - d2 eps.
  const Rat s(3);
  expect = mat2(Rat(0), -d[2], d[2], Rat(0));
  expect += Rat(2 * d[1] * s * s) * Tensor<Rat>(2, 2, {Rat(0), Rat(0), Rat(0), Rat(1)});
  EXPECT_EQ(val_boundary_walk<Rat>(Polytope::standard_simplex(2, 1, s), d, zt, et), expect);
  // Segment through the origin from -e1 to 2 e1.
  const Polytope through = Polytope::hull(2, {v2(-1, 0), v2(2, 0)});
  expect = mat2(Rat(0), d[0] - 2 * d[2], -(d[0] - 2 * d[2]), Rat(0));
  expect += Rat(10 * d[1]) * Tensor<Rat>(2, 2, {Rat(0), Rat(0), Rat(0), Rat(1)});
  EXPECT_EQ(val_boundary_walk<Rat>(through, d, zt, et), expect);
}

// Full display on the rotated scaled simplex:
//   d3 s^4/24 [[2,-1],[-1,2]] + d1 s^2 I + d4 s^2 [[-1,0],[0,1]]
//   + eta(s^2) [[0,1],[-1,0]] + zeta(s^2)/s^2 [[1,1],[1,1]] + d2 [[0,-1],[1,0]]
TEST(ValBoundaryWalk, SimplexDisplay) {
  const std::array<Rat, 5> d{Rat(2, 3), Rat(5, 7), Rat(-3, 2), Rat(4, 5), Rat(7, 11)};
  const CoefFn zt = CoefFn::linear(Rat(11, 5));
  const CoefFn et = CoefFn::linear(Rat(-2, 9));
  for (const Rat& s : {Rat(1), Rat(2), Rat(1, 2)}) {
    const Rat s2 = s * s;
    const Rat s4 = s2 * s2;
    Tensor<Rat> expect = mat2(Rat(0), Rat(0), Rat(0), Rat(0));
    expect += Rat(d[3] * s4 / 24) * mat2(Rat(2), Rat(-1), Rat(-1), Rat(2));
    expect += Rat(d[1] * s2) * mat2(Rat(1), Rat(0), Rat(0), Rat(1));
    expect += Rat(d[4] * s2) * mat2(Rat(-1), Rat(0), Rat(0), Rat(1));
    expect += Rat(et(s2)) * mat2(Rat(0), Rat(1), Rat(-1), Rat(0));
    expect += Rat(zt(s2) / s2) * mat2(Rat(1), Rat(1), Rat(1), Rat(1));
    expect += Rat(d[2]) * mat2(Rat(0), Rat(-1), Rat(1), Rat(0));
    EXPECT_EQ(val_boundary_walk<Rat>(Polytope::standard_simplex(2, 2, s), d, zt, et), expect)
        << "s=" << format_rational(s);
  }
}

// Interior origin: all four edges of the rotated square enter the walk, the
// boundary-neighbor and first/last terms vanish, and the closing constant is
// -d0.  Uses a table coefficient function to exercise grid lookups.
TEST(ValBoundaryWalk, SquareWithInteriorOrigin) {
  std::map<Rat, Rat, RatLess> grid;
  grid[Rat(2)] = Rat(5, 7);
  const CoefFn zt = CoefFn::table(grid);
  const CoefFn et = CoefFn::linear(Rat(3, 4));
  const std::array<Rat, 5> d{Rat(1, 3), Rat(9), Rat(4), Rat(6, 5), Rat(8)};
  // d3 * 4/3 * I + 2 zeta(2) I + (4 eta(2) - d0) [[0,1],[-1,0]]
  Tensor<Rat> expect = mat2(Rat(0), Rat(0), Rat(0), Rat(0));
  expect += Rat(d[3] * Rat(4, 3) + 2 * Rat(5, 7)) * mat2(Rat(1), Rat(0), Rat(0), Rat(1));
  expect += Rat(4 * (Rat(3, 4) * 2) - d[0]) * mat2(Rat(0), Rat(1), Rat(-1), Rat(0));
  EXPECT_EQ(val_boundary_walk<Rat>(square_pm1(), d, zt, et), expect);
}

// Origin strictly inside an edge of the rotated polytope: the first/last
// comparison picks up the two neighbors across that edge.
TEST(ValBoundaryWalk, OriginInsideEdge) {
  const std::array<Rat, 5> d{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
  const CoefFn zero;
  const Tensor<Rat> got = val_boundary_walk<Rat>(edge_origin_triangle(), d, zero, zero);
  EXPECT_EQ(got, mat2(Rat(0), Rat(0), Rat(0), Rat(3)));
}

TEST(ValBoundaryWalk, RequiresOriginMembership) {
  const std::array<Rat, 5> d{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)};
  const CoefFn zero;
  EXPECT_THROW(val_boundary_walk<Rat>(far_square(), d, zero, zero), std::invalid_argument);
  EXPECT_THROW(val_boundary_walk<Rat>(Polytope::empty(2), d, zero, zero),
               std::invalid_argument);
}

// The boundary-walk representation must agree with the sum of classified
// families under the constant dictionary
//   zeta = 2 zeta~, c1 = -2 d4, eta(t) = 2 eta~(t) + 2 d4 t,
//   a = d3, b = d1, c0 = -d2, c0' = d2 - d0
// on every polytope containing the origin.
TEST(ValBoundaryWalk, MatchesClassifiedFamilySum) {
  const std::array<Rat, 5> d{Rat(2, 3), Rat(5, 7), Rat(-3, 2), Rat(4, 5), Rat(7, 11)};
  const Rat zc(11, 5), ec(-2, 9);
  const CoefFn zt = CoefFn::linear(zc);
  const CoefFn et = CoefFn::linear(ec);

  ValuationSpec sym;
  sym.family = "sym";
  sym.n = 2;
  sym.p = 2;
  sym.zeta = CoefFn::linear(2 * zc);
  ValuationSpec fc;
  fc.family = "facet_cross";
  fc.n = 2;
  fc.params["r"] = Rat(0);
  fc.params["c"] = -2 * d[4];
  ValuationSpec eu;
  eu.family = "euler";
  eu.n = 2;
  eu.params["c_relint"] = d[2] - d[0];
  eu.params["c_const"] = -d[2];
  eu.zeta = CoefFn::linear(2 * ec + 2 * d[4]);
  ValuationSpec pm;
  pm.family = "planar_moment";
  pm.n = 2;
  pm.params["a"] = d[3];
  ValuationSpec th;
  th.family = "theta";
  th.n = 2;
  th.p = 2;
  th.params["b"] = d[1];
  ValuationSpec sum;
  sum.family = "composite";
  sum.n = 2;
  sum.terms = {sym, fc, eu, pm, th};

  const Polytope cases[] = {
      Polytope::point(VecQ{Rat(0), Rat(0)}),
      Polytope::standard_simplex(2, 1, Rat(3)),
      Polytope::standard_simplex(2, 2, Rat(2)),
      Polytope::standard_simplex(2, 2, Rat(1, 2)),
      Polytope::hull(2, {v2(-1, 0), v2(2, 0)}),
      edge_origin_triangle(),
      pentagon(),
      square_pm1(),
      Polytope::hull(2, {v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2)}),
  };
  for (const Polytope& P : cases) {
    EXPECT_EQ(val_boundary_walk<Rat>(P, d, zt, et), evaluate<Rat>(sum, P))
        << "vertices: " << P.vertex_count();
  }
}

TEST(Evaluate, DispatchAndConeComposition) {
  // compose_hull_origin evaluates the family on conv({o} ∪ P).
  ValuationSpec spec;
  spec.family = "sym";
  spec.n = 2;
  spec.p = 2;
  spec.zeta = CoefFn::linear(Rat(1));
  spec.compose_hull_origin = true;
  const Polytope P = far_square();
  EXPECT_EQ(evaluate<Rat>(spec, P), val_sym<Rat>(P.cone_over_origin(), 2, CoefFn::linear(Rat(1))));

  ValuationSpec cm;
  cm.family = "cross_moment";
  cm.n = 2;
  cm.params["c"] = Rat(3);
  Tensor<Rat> expect = val_cross_moment<Rat>(P, Rat(3));
  EXPECT_EQ(evaluate<Rat>(cm, P), expect);

  // Composites sum their terms.
  ValuationSpec both;
  both.family = "composite";
  both.n = 2;
  ValuationSpec cm1 = cm;
  cm1.params["c"] = Rat(1);
  ValuationSpec cm2 = cm;
  cm2.params["c"] = Rat(2);
  both.terms = {cm1, cm2};
  EXPECT_EQ(evaluate<Rat>(both, P), expect);
}

TEST(Evaluate, ValidationErrors) {
  const Polytope P = far_square();
  ValuationSpec spec;
  spec.family = "no_such_family";
  spec.n = 2;
  EXPECT_THROW(evaluate<Rat>(spec, P), std::invalid_argument);

  spec.family = "facet_cross";
  spec.params["r"] = Rat(5);
  EXPECT_THROW(evaluate<Rat>(spec, P), std::invalid_argument);
  spec.params["r"] = Rat(1, 2);
  EXPECT_THROW(evaluate<Rat>(spec, P), std::invalid_argument);
  spec.params["r"] = Rat(1);
  EXPECT_NO_THROW(evaluate<Rat>(spec, P));

  // Dimension mismatch between spec and polytope.
  spec.n = 3;
  EXPECT_THROW(evaluate<Rat>(spec, P), std::invalid_argument);

  // theta outside the plane.
  ValuationSpec th;
  th.family = "theta";
  th.n = 3;
  EXPECT_THROW(validate_spec(th), std::invalid_argument);

  // Composite rules: no empty term list, no cone flag on the composite
  // itself, no mixed tensor orders.
  ValuationSpec comp;
  comp.family = "composite";
  comp.n = 2;
  EXPECT_THROW(validate_spec(comp), std::invalid_argument);
  ValuationSpec sym;
  sym.family = "sym";
  sym.n = 2;
  sym.p = 2;
  ValuationSpec sym1 = sym;
  sym1.p = 1;
  comp.terms = {sym, sym1};
  EXPECT_THROW(validate_spec(comp), std::invalid_argument);
  comp.terms = {sym, sym};
  EXPECT_NO_THROW(validate_spec(comp));
  comp.compose_hull_origin = true;
  EXPECT_THROW(validate_spec(comp), std::invalid_argument);
}

TEST(Evaluate, TensorOrderAndGradingParity) {
  ValuationSpec s;
  s.family = "sym";
  s.n = 4;
  s.p = 3;
  EXPECT_EQ(tensor_order(s), 3);
  EXPECT_EQ(grading_parity(s), 0);

  ValuationSpec cm;
  cm.family = "cross_moment";
  cm.n = 4;
  EXPECT_EQ(tensor_order(cm), 3);
  EXPECT_EQ(grading_parity(cm), 1);

  ValuationSpec fc;
  fc.family = "facet_cross";
  fc.n = 3;
  EXPECT_EQ(tensor_order(fc), 3);
  EXPECT_EQ(grading_parity(fc), 1);

  ValuationSpec eu;
  eu.family = "euler";
  eu.n = 3;
  EXPECT_EQ(tensor_order(eu), 3);
  EXPECT_EQ(grading_parity(eu), 1);

  ValuationSpec pm;
  pm.family = "planar_moment";
  pm.n = 2;
  EXPECT_EQ(tensor_order(pm), 2);
  EXPECT_EQ(grading_parity(pm), 0);

  ValuationSpec th;
  th.family = "theta";
  th.n = 2;
  th.p = 2;
  EXPECT_EQ(grading_parity(th), 0);
  th.p = 3;
  EXPECT_EQ(grading_parity(th), 1);
  th.pre_rotate = false;
  EXPECT_EQ(grading_parity(th), -1);

  ValuationSpec tv;
  tv.family = "theta_visible";
  tv.n = 2;
  tv.p = 2;
  EXPECT_EQ(grading_parity(tv), 0);

  ValuationSpec bw;
  bw.family = "boundary_walk";
  bw.n = 2;
  EXPECT_EQ(tensor_order(bw), 2);
  EXPECT_EQ(grading_parity(bw), -1);

  ValuationSpec comp;
  comp.family = "composite";
  comp.n = 3;
  ValuationSpec fc2 = fc;
  fc2.params["r"] = Rat(1);
  comp.terms = {fc, fc2};
  EXPECT_EQ(grading_parity(comp), 1);  // common parity survives
  ValuationSpec s3 = s;
  s3.n = 3;
  comp.terms = {fc, s3};
  EXPECT_EQ(grading_parity(comp), -1);  // mixed parities degrade
}

TEST(Evaluate, FloatingProfileTracksExact) {
  const double tol = 1e-12;
  {
    const Polytope P = Polytope::hull(
        3, {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(Rat(1, 3), Rat(1, 5), Rat(1, 7))});
    ValuationSpec spec;
    spec.family = "sym";
    spec.n = 3;
    spec.p = 2;
    spec.zeta = CoefFn::linear(Rat(7, 3));
    expect_close(evaluate<Rat>(spec, P), evaluate<double>(spec, P), tol);
    spec.family = "facet_cross";
    spec.params["r"] = Rat(1);
    spec.params["c"] = Rat(-3, 2);
    expect_close(evaluate<Rat>(spec, P), evaluate<double>(spec, P), tol);
    spec.family = "cross_moment";
    spec.params["c"] = Rat(2, 7);
    expect_close(evaluate<Rat>(spec, P), evaluate<double>(spec, P), tol);
  }
  {
    ValuationSpec bw;
    bw.family = "boundary_walk";
    bw.n = 2;
    bw.params["d0"] = Rat(2, 3);
    bw.params["d1"] = Rat(5, 7);
    bw.params["d2"] = Rat(-3, 2);
    bw.params["d3"] = Rat(4, 5);
    bw.params["d4"] = Rat(7, 11);
    bw.zeta = CoefFn::linear(Rat(11, 5));
    bw.eta = CoefFn::linear(Rat(-2, 9));
    expect_close(evaluate<Rat>(bw, pentagon()), evaluate<double>(bw, pentagon()), tol);
    expect_close(evaluate<Rat>(bw, edge_origin_triangle()),
                 evaluate<double>(bw, edge_origin_triangle()), tol);
  }
}

}  // namespace
}  // namespace tenval
