/* SPDX-License-Identifier: Apache-2.0
 *
 * Unit tests for wall lines and the classification against p_u -- p_v.
 */
#include <gtest/gtest.h>

#include "k3wall/walls.hpp"

using namespace k3wall;

namespace {
RatPoint pt(long xn, long xd, long yn, long yd) { return RatPoint{make_rational(xn, xd), make_rational(yn, yd)}; }
}  // namespace

TEST(Pivot, Examples) {
  EXPECT_EQ(pushforward_pivot(Surface(13)), pt(-3, 13, 0, 1));
  EXPECT_EQ(pushforward_pivot(Surface(17)), pt(-2, 17, 0, 1));
  EXPECT_EQ(project(distinguished_vectors(Surface(13)).w), pt(-3, 13, 0, 1));
}

TEST(FirstWall, Collinear) {
  const Surface X(13);
  const GreyVertices g = grey_vertices(X);
  EXPECT_EQ(g.p_u, pt(-3, 26, 9, 52));
  EXPECT_EQ(g.p_v, pt(3, 13, 9, 13));
  EXPECT_TRUE(collinear(pushforward_pivot(X), g.p_u, g.p_v));
  const Segment s = first_wall_segment(X);
  EXPECT_EQ(s.a, g.p_u);
  EXPECT_EQ(s.b, g.p_v);
  EXPECT_EQ(grey_vertices(Surface(23)).p_v, pt(5, 23, 25, 23));
}

TEST(WallLine, ThroughProjection) {
  const Surface X(13);
  const auto d = distinguished_vectors(X);
  const GreyVertices g = grey_vertices(X);
  const Line lw = wall_line(d.w, g.p_v);
  EXPECT_TRUE(lw.contains(pt(-3, 13, 0, 1)));
  const Line lv = wall_line(d.v, g.p_u);
  EXPECT_TRUE(lv.contains(g.p_v));
  EXPECT_TRUE(lv.contains(g.p_u));
}

TEST(Classify, Examples) {
  const Surface X(13);
  const GreyVertices g = grey_vertices(X);
  EXPECT_EQ(classify_candidate_wall(g.p_v, X).verdict, WallVerdict::On);
  EXPECT_EQ(project(MukaiVector(8, 3, 12)), pt(1, 4, 2, 3));
  EXPECT_EQ(classify_candidate_wall(pt(1, 4, 2, 3), X).verdict, WallVerdict::Below);
  EXPECT_EQ(classify_candidate_wall(pt(0, 1, 1, 1), X).verdict, WallVerdict::Above);
}

TEST(BrillNoetherLine, Examples) {
  const Surface X(13);
  const Line lv = brill_noether_line(MukaiVector(9, 3, 13));
  EXPECT_TRUE(lv.contains(pt(0, 1, 1, 1)));
  EXPECT_TRUE(lv.contains(pt(3, 13, 9, 13)));
  const Line h = brill_noether_line(MukaiVector(0, 1, 0));
  EXPECT_TRUE(h.contains(pt(5, 1, 1, 1)));
  EXPECT_FALSE(h.contains(pt(5, 1, 2, 1)));
  const Line v = brill_noether_line(MukaiVector(1, 0, 2));
  EXPECT_TRUE(v.contains(pt(0, 1, 7, 1)));
  EXPECT_FALSE(v.contains(pt(1, 1, 7, 1)));
}

TEST(Intersect, Lines) {
  const Line a = line_through(pt(0, 1, 0, 1), pt(1, 1, 1, 1));
  const Line b = line_through(pt(0, 1, 1, 1), pt(1, 1, 0, 1));
  auto q = intersect(a, b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, pt(1, 2, 1, 2));
  const Line c = line_through(pt(0, 1, 1, 1), pt(1, 1, 2, 1));
  EXPECT_FALSE(intersect(a, c).has_value());
}
