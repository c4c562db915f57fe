/* SPDX-License-Identifier: Apache-2.0
 *
 * Unit tests for the triangle, the chain searches, the large-p certificate
 * and the endgame checks.
 */
#include <gtest/gtest.h>

#include <algorithm>

#include "k3wall/polysearch.hpp"

using namespace k3wall;

namespace {
RatPoint pt(long xn, long xd, long yn, long yd) { return RatPoint{make_rational(xn, xd), make_rational(yn, yd)}; }

/* Independent count of the lattice points of a triangle with vertices
 * o, z1, z2 (boundary included). */
std::size_t count_lattice(const GaussPoint& z1, const GaussPoint& z2) {
  auto cross = [](long ax, long ay, long bx, long by) { return ax * by - ay * bx; };
  std::size_t n = 0;
  const long xlo = std::min({0L, z1.a, z2.a}), xhi = std::max({0L, z1.a, z2.a});
  const long yhi = std::max(z1.b, z2.b);
  for (long y = 0; y <= yhi; ++y)
    for (long x = xlo; x <= xhi; ++x) {
      const long c1 = cross(z1.a, z1.b, x, y);
      const long c2 = cross(z2.a - z1.a, z2.b - z1.b, x - z1.a, y - z1.b);
      const long c3 = cross(-z2.a, -z2.b, x - z2.a, y - z2.b);
      const bool neg = c1 < 0 || c2 < 0 || c3 < 0, pos = c1 > 0 || c2 > 0 || c3 > 0;
      if (!(neg && pos)) ++n;
    }
  return n;
}
}  // namespace

TEST(Triangle, Vertices) {
  const Triangle t13 = triangle(Surface(13));
  EXPECT_EQ(t13.z1, (GaussPoint{-4, 3}));
  EXPECT_EQ(t13.z2, (GaussPoint{39, 9}));
  EXPECT_EQ(triangle(Surface(17)).z2_prime, pt(125, 12, 5, 1));
  const Triangle t23 = triangle(Surface(23));
  EXPECT_EQ(t23.z1, (GaussPoint{2, 5}));
  EXPECT_EQ(t23.z2_prime, pt(383, 20, 6, 1));
}

TEST(Triangle, Containment) {
  const Triangle t13 = triangle(Surface(13));
  for (GaussPoint g : {GaussPoint{-2, 2}, GaussPoint{-3, 3}, GaussPoint{-2, 3}}) EXPECT_TRUE(triangle_contains(t13, g));
  EXPECT_FALSE(triangle_contains(t13, GaussPoint{-5, 3}));
  const Triangle t17 = triangle(Surface(17));
  EXPECT_TRUE(triangle_contains(t17, GaussPoint{1, 4}));
  EXPECT_TRUE(triangle_contains(t17, GaussPoint{2, 4}));
}

TEST(Triangle, LatticePointsMatchIndependentCount) {
  for (long p : {13L, 17L, 19L, 23L}) {
    const Triangle t = triangle(Surface(p));
    const auto pts = lattice_points(t);
    EXPECT_EQ(pts.size(), count_lattice(t.z1, t.z2)) << "p=" << p;
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), [](const GaussPoint& a, const GaussPoint& b) {
      return a.b != b.b ? a.b < b.b : a.a < b.a;
    }));
  }
}

TEST(MaxInteriorBound, P13) {
  const Verdict v = max_interior_bound(Surface(13), SearchMode::Refined);
  EXPECT_EQ(v.status, VerdictStatus::Verified);
  EXPECT_EQ(v.max_interior_bound, 21);
  EXPECT_EQ(v.target, 22);
  EXPECT_EQ(v.chi, -39);
  EXPECT_GE(v.triangle_floor, 22);
}

TEST(MaxInteriorBound, P17) {
  const Verdict v = max_interior_bound(Surface(17), SearchMode::Refined);
  EXPECT_EQ(v.status, VerdictStatus::Verified);
  EXPECT_EQ(v.max_interior_bound, 32);
}

TEST(MaxInteriorBound, P23) {
  const Verdict v = max_interior_bound(Surface(23), SearchMode::Refined);
  EXPECT_EQ(v.status, VerdictStatus::Verified);
  EXPECT_LE(v.max_interior_bound, 47);
}

TEST(MaxInteriorBound, ZeroBudgetIsCapped) {
  SearchOptions opt;
  opt.budget_sec = 0.0;
  const Verdict v = max_interior_bound(Surface(23), SearchMode::Refined, opt);
  EXPECT_EQ(v.status, VerdictStatus::ResourceCapped);
}

TEST(MaxInteriorBound, WitnessIsConvexChainToZ2) {
  const Surface X(17);
  const Verdict v = max_interior_bound(X, SearchMode::Refined);
  const Triangle t = triangle(X);
  ASSERT_GE(v.witness.vertices.size(), 2u);
  EXPECT_EQ(v.witness.vertices.front(), t.o);
  EXPECT_EQ(v.witness.vertices.back(), t.z2);
  const auto& w = v.witness.vertices;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    const GaussPoint e1 = w[i] - w[i - 1], e2 = w[i + 1] - w[i];
    EXPECT_LT(e1.a * e2.b - e1.b * e2.a, 0) << "not a strict clockwise turn at " << w[i].to_string();
  }
  for (const auto& g : w) EXPECT_TRUE(triangle_contains(t, g));
  EXPECT_EQ(refined_chain_bound(v.witness, v.chi, X).bound, v.max_interior_bound);
}

TEST(Envelope, FloorAndParityRoutes) {
  const EnvelopeCheck e19 = envelope_check(Surface(19));
  EXPECT_EQ(e19.floor_h, 19 + 9 - 1);
  EXPECT_TRUE(e19.outside_points_ok);
  const EnvelopeCheck e29 = envelope_check(Surface(29));
  EXPECT_EQ(e29.h_prime, 44);
  EXPECT_FALSE(e29.q1_odd);
  const EnvelopeCheck e47 = envelope_check(Surface(47));
  EXPECT_EQ(e47.floor_h, 47 + 25 - 1);
  for (long p : {19L, 29L, 47L, 59L}) EXPECT_TRUE(envelope_check(Surface(p)).factor_form_agrees) << "p=" << p;
}

TEST(LargeP, P31) {
  const LargePCertificate c = large_p_certificate(31);
  EXPECT_TRUE(c.applicable);
  EXPECT_TRUE(c.verdict);
  EXPECT_EQ(c.m, 3);
  EXPECT_EQ(c.f1, make_rational(81, 80));
  EXPECT_EQ(c.route, "m=3");
}

TEST(LargeP, P41Direct) {
  const LargePCertificate c = large_p_certificate(41);
  EXPECT_EQ(c.m, 4);
  EXPECT_EQ(c.route, "m=4 direct");
  EXPECT_TRUE(c.verdict);
}

TEST(LargeP, P251) {
  const LargePCertificate c = large_p_certificate(251);
  EXPECT_TRUE(c.verdict);
  EXPECT_EQ(c.route, "large");
  EXPECT_EQ(radical_cmp(c.epsilon2, make_rational(48, 35)), Ordering::Less);
  EXPECT_TRUE(c.route_holds);
}

TEST(LargeP, OutsideHypothesis) {
  EXPECT_FALSE(large_p_certificate(47).applicable);
  EXPECT_FALSE(large_p_certificate(59).applicable);
  EXPECT_FALSE(large_p_certificate(29).applicable);
}

TEST(Buckets, DerivedFromMinNondivisor) {
  for (const auto& b : derived_buckets())
    for (auto p : b.primes) EXPECT_EQ(min_nondivisor(p), b.m) << "p=" << p;
  /* 230 = 2 * 5 * 23 is not divisible by 3, so m(229) = 3 */
  EXPECT_EQ(min_nondivisor(229), 3);
  /* 234 = 2 * 3^2 * 13 is not divisible by 4, so m(233) = 4 */
  EXPECT_EQ(min_nondivisor(233), 4);
  /* 198 = 2 * 3^2 * 11 is not divisible by 4, so m(197) = 4 */
  EXPECT_EQ(min_nondivisor(197), 4);
}

TEST(Endgame, P13) {
  const EndgameChecks e = theorem_endgame_checks(Surface(13));
  EXPECT_TRUE(e.all_ok());
  EXPECT_TRUE(e.k_zero_unique);
}

TEST(Endgame, P23LatticeFree) { EXPECT_TRUE(theorem_endgame_checks(Surface(23)).open_segment_lattice_free); }

TEST(Endgame, P17SquareAtZero) {
  const EndgameChecks e = theorem_endgame_checks(Surface(17));
  auto it = std::find_if(e.rows.begin(), e.rows.end(), [](const EndgameK& r) { return r.k == 0; });
  ASSERT_NE(it, e.rows.end());
  EXPECT_EQ(it->square, 0);
  EXPECT_EQ(it->wall, WallVerdict::On);
}
