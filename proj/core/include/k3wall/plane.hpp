/* SPDX-License-Identifier: Apache-2.0
 *
 * plane.hpp -- the projection plane of the (b, w) slice of stability
 * conditions.
 *
 * A class (r, c, s) with s != 0 projects to pr = (c/s, r/s).  The stability
 * parameter (b, w) is recorded through w^2 only and corresponds to the
 * kernel point k(b,w) = (2b, 2) / (H^2 (b^2 + w^2)).  The region V(X) is the
 * inside of the parabola y = p x^2 with the closed hole segments I_delta of
 * all roots delta removed; I_delta joins pr(delta) to the second
 * intersection of the line o--pr(delta) with the parabola.
 *
 * Root-on-ray lemma.  For a primitive direction (u, v) with v > 0 the roots
 * whose projection lies on the open ray o + t (u, v), t > 0, are exactly
 * +-(v, u, (p u^2 + 1)/v), and they exist iff v divides p u^2 + 1.  (If
 * (c, r) = j (u, v) then j (v s - p j u^2) = 1 forces j = +-1.)  Hence
 * membership in V(X) is decidable exactly, and each ray carries at most one
 * hole.
 */
#ifndef K3WALL_PLANE_HPP
#define K3WALL_PLANE_HPP

#include <optional>
#include <string>
#include <vector>

#include "k3wall/exactnum.hpp"
#include "k3wall/mukai.hpp"

namespace k3wall {

struct RatPoint {
  Rational x, y;
  bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
  RatPoint operator+(const RatPoint& o) const { return {x + o.x, y + o.y}; }
  RatPoint operator-(const RatPoint& o) const { return {x - o.x, y - o.y}; }
  std::string to_string() const;
};

/* (b - a) x (c - a); positive when a, b, c turn counterclockwise. */
Rational orient(const RatPoint& a, const RatPoint& b, const RatPoint& c);
bool collinear(const RatPoint& a, const RatPoint& b, const RatPoint& c);
/* Is q on the closed segment [a, b]? */
bool on_closed_segment(const RatPoint& q, const RatPoint& a, const RatPoint& b);
/* Is q on the open segment (a, b)? */
bool on_open_segment(const RatPoint& q, const RatPoint& a, const RatPoint& b);

struct Charge {
  Rational re, im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

struct Segment {
  RatPoint a, b;
  bool open_a = false, open_b = false;
};

/* Convex polygon listed counterclockwise, with explicit boundary rules.
 * edge_open_included[i] covers the open edge vertices[i] -> vertices[i+1];
 * excluded_pieces are closed sub-segments of the boundary that are removed
 * again; vertices are never included.  With clip_to_cone the region is
 * further intersected with {y > p x^2}. */
struct Region {
  std::vector<RatPoint> vertices;
  std::vector<bool> edge_open_included;
  std::vector<Segment> excluded_pieces;
  bool clip_to_cone = false;
};

/* pr(a) = (c/s, r/s); throws std::domain_error when s == 0 or a == 0. */
RatPoint project(const MukaiVector& a);

Charge central_charge(const MukaiVector& a, const Rational& b, const Rational& w_sq,
                      const Surface& X);

/* Compare the phases in (0, 1] of two charges.  Throws std::domain_error
 * ("vector in kernel of Z" / "not a heart phase") on invalid input. */
Ordering phase_compare(const Charge& z1, const Charge& z2);

RatPoint kernel_point(const Rational& b, const Rational& w_sq, const Surface& X);

/* Is the point strictly inside the parabola, y > p x^2? */
bool above_parabola(const RatPoint& pt, const Surface& X);

/* The hole I_delta.  Throws std::domain_error for non-roots, s == 0, or
 * roots projecting outside the cone ("root outside cone"). */
Segment hole_segment(const MukaiVector& delta, const Surface& X);

/* The unique root (with s > 0) on the open ray through `direction`, if any. */
std::optional<MukaiVector> root_on_ray(const RatPoint& direction, const Surface& X);

enum class VStatus { Inside, OnHole, OutsideCone, Unknown };
const char* to_string(VStatus s);

struct VMembership {
  VStatus status;
  std::optional<MukaiVector> witness; /* the root whose hole contains the point */
  std::int64_t searched_bound;        /* the caller-supplied bound, echoed */
  std::string reason;
};

/* Exact membership in V(X).  Uses the root-on-ray lemma, so Unknown is never
 * produced; s_max is only echoed for reporting. */
VMembership in_V(const RatPoint& pt, const Surface& X, std::int64_t s_max);

struct GreyVertices {
  RatPoint o, p_u, q, p_v, o_prime;
};
GreyVertices grey_vertices(const Surface& X);
Region grey_region(const Surface& X);
bool region_contains(const Region& reg, const RatPoint& pt, const Surface& X);
bool grey_contains(const RatPoint& pt, const Surface& X);

enum class ProofStatus { Proved, Failed };
const char* to_string(ProofStatus s);

struct SegmentCertificate {
  std::string name;        /* "(op_v)", "(oq)", "(op_u)" */
  ProofStatus status;
  std::int64_t dir_u, dir_v; /* primitive ray direction (c, r) */
  Integer residue;          /* (p u^2 + 1) mod v: nonzero means no root on the ray */
  std::string argument;
};

struct RootScan {
  std::vector<MukaiVector> roots; /* representatives with s > 0 */
  std::int64_t s_max = 0;
  std::int64_t candidates_checked = 0;
  std::vector<SegmentCertificate> certificates;
};

/* The three exact segment certificates for the grey region. */
std::vector<SegmentCertificate> grey_segment_certificates(const Surface& X);

/* All roots (r, c, s) with 1 <= s <= s_max whose projection lies in `reg`.
 * A root and its negative have the same projection; the representative with
 * s > 0 is reported.  Also attaches the grey-region segment certificates. */
RootScan enumerate_roots_in_region(const Region& reg, const Surface& X, std::int64_t s_max);

}  // namespace k3wall

#endif  // K3WALL_PLANE_HPP
