/* SPDX-License-Identifier: Apache-2.0
 *
 * walls.hpp -- wall lines in the projection plane and the classification of
 * candidate walls for the pushforward class w = v(i_*F) against the segment
 * p_u -- p_v.
 *
 * A wall for a class e is a connected component of L intersected with V(X),
 * where L passes through pr(e) (s != 0) or has slope r/c (s == 0).  Lines are
 * stored exactly; clipping to V(X) is a separate, bound-aware step.
 */
#ifndef K3WALL_WALLS_HPP
#define K3WALL_WALLS_HPP

#include <optional>
#include <string>
#include <vector>

#include "k3wall/plane.hpp"

namespace k3wall {

struct Line {
  RatPoint anchor;
  Rational dx, dy; /* normalized: first nonzero component positive */
  bool contains(const RatPoint& pt) const;
  /* Point anchor + t (dx, dy). */
  RatPoint at(const Rational& t) const;
  std::string to_string() const;
};

Line line_through(const RatPoint& a, const RatPoint& b);
Line line_with_direction(const RatPoint& anchor, Rational dx, Rational dy);
/* Intersection of two lines; nullopt when parallel. */
std::optional<RatPoint> intersect(const Line& a, const Line& b);

/* The wall line of e through `through` (see header comment). */
Line wall_line(const MukaiVector& e, const RatPoint& through);

/* The closed segment p_u -- p_v. */
Segment first_wall_segment(const Surface& X);
/* pr(w) for w = v(i_*F) = (0, m^2, 2pm - m^2 p), i.e. (m / (p (2 - m)), 0). */
RatPoint pushforward_pivot(const Surface& X);

enum class WallVerdict { Below, On, Above };
const char* to_string(WallVerdict v);

struct WallClassification {
  WallVerdict verdict;
  RatPoint pivot;
  std::optional<RatPoint> q1; /* intersection with the line o -- p_u */
  std::optional<RatPoint> q2; /* intersection with the line o -- p_v */
};

/* Classify the wall through pr(w) and the destabilizer's projection against
 * the segment p_u -- p_v by comparing directions at the pivot. */
WallClassification classify_candidate_wall(const RatPoint& destabilizer_pr, const Surface& X);

/* The Brill-Noether line: through o' = (0, 1) and pr(e), or slope r/c. */
Line brill_noether_line(const MukaiVector& e);

/* Clipping of a line to V(X) around a base point.
 *
 * Holes of roots with s > s_max lie in the band 0 < y - p x^2 < 1/s_max^2
 * (the top point pr(delta) has y - p x^2 = 1/s^2 and the hole descends to the
 * parabola).  Walking from the base point in each direction, the first
 * crossing with a hole of a root with s <= s_max is exact; if the walk
 * reaches the band before meeting such a hole, the end is reported as
 * uncertified together with the bound. */
struct ClipEnd {
  bool certified = false;
  std::optional<MukaiVector> hole_root; /* root whose hole ends the component */
  std::optional<RatPoint> point;        /* exact crossing point, when certified */
  std::string note;
};
struct WallClip {
  Line line;
  RatPoint base;
  ClipEnd backward, forward; /* ends in -direction / +direction */
  std::int64_t s_max;
};
WallClip clip_wall(const Line& line, const RatPoint& base, const Surface& X, std::int64_t s_max);

}  // namespace k3wall

#endif  // K3WALL_WALLS_HPP
