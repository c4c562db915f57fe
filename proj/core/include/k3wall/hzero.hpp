/* SPDX-License-Identifier: Apache-2.0
 *
 * hzero.hpp -- upper bounds for h^0.
 *
 * Classes are drawn in the Gaussian-integer plane by  Zbar(E) = (r - s) + i c.
 * The norm of a + i b is  sqrt(a^2 + (4p + 4) b^2).  For a convex chain
 * o = p_0, p_1, ..., p_n (the Harder-Narasimhan polygon of a class with
 * Euler characteristic chi) one has
 *     h^0 <= chi/2 + (1/2) sum ||p_i p_{i+1}||,
 * refined by parity: a group of consecutive edges whose real displacement is
 * odd contributes (chi_g - 1)/2 + floor((1 + L_g)/2), an even one
 * chi_g/2 + floor(L_g/2).  A single class also satisfies the Brill-Noether
 * type bound  floor((chi + sqrt((r-s)^2 + 4 p c^2 + 4 k^2))/2),
 * k = gcd(r - s, c).
 */
#ifndef K3WALL_HZERO_HPP
#define K3WALL_HZERO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "k3wall/mukai.hpp"
#include "k3wall/plane.hpp"

namespace k3wall {

struct GaussPoint {
  std::int64_t a = 0; /* r - s */
  std::int64_t b = 0; /* c     */
  bool operator==(const GaussPoint& o) const { return a == o.a && b == o.b; }
  auto operator<=>(const GaussPoint& o) const = default;
  GaussPoint operator+(const GaussPoint& o) const { return {a + o.a, b + o.b}; }
  GaussPoint operator-(const GaussPoint& o) const { return {a - o.a, b - o.b}; }
  RatPoint rat() const { return RatPoint{Rational(static_cast<long>(a)), Rational(static_cast<long>(b))}; }
  std::string to_string() const;
};

/* Zbar of a Mukai vector. */
GaussPoint zbar(const MukaiVector& e);

struct Chain {
  std::vector<GaussPoint> vertices;
  /* Validates the chain invariants (starts at o, edges in the closed upper
   * half plane excluding the positive real direction, angles weakly
   * decreasing) and merges consecutive collinear edges.  Throws
   * std::invalid_argument on violation. */
  static Chain normalized(std::vector<GaussPoint> vertices);
  std::string to_string() const;
};

/* a^2 + (4p + 4) b^2 */
Integer norm_sq(const GaussPoint& g, const Surface& X);
Rational norm_sq(const RatPoint& g, const Surface& X);
RadicalSum norm(const GaussPoint& g, const Surface& X);
RadicalSum norm(const RatPoint& g, const Surface& X);

/* floor((chi + sqrt((r-s)^2 + 4pc^2 + 4k^2)) / 2); errors on (r-s, c) = (0,0). */
Integer bn_bound_int(const MukaiVector& e, const Surface& X);
/* The discriminant (r-s)^2 + 4pc^2 + 4 gcd(r-s, c)^2 for a segment a + ib. */
Integer bn_discriminant(std::int64_t a, std::int64_t b, const Surface& X);

/* floor((p+m^2)/2 + sqrt(4pm^2 + (p-m^2)^2 + 4)/2); asserts it equals p+m^2. */
Integer prop52_identity(const Surface& X);

struct PolygonBound {
  RadicalSum value;
  Integer floor;
};
PolygonBound polygon_bound(const Chain& ch, const Integer& chi, const Surface& X);

/* A polyline with rational vertices (envelopes may pass through non-lattice
 * points); groups are delimited by vertex indices that must be lattice
 * points. */
struct Envelope {
  std::vector<RatPoint> vertices;
  static Envelope of(const Chain& ch);
};

/* Sum over groups of the parity-refined floors.  `chi_total` is the Euler
 * characteristic of the whole class; its parity must match the total real
 * displacement.  Only the parities of the per-group characteristics enter,
 * so the total suffices. */
Integer parity_refined_bound(const Envelope& env, const std::vector<std::size_t>& group_boundaries,
                             const Integer& chi_total, const Surface& X);
/* Variant with explicit per-group characteristics (validated against the
 * per-group displacement parities). */
Integer parity_refined_bound(const Envelope& env, const std::vector<std::size_t>& group_boundaries,
                             const std::vector<Integer>& chis, const Surface& X);

/* -2((n-1)^2 + 1) */
Integer min_square_decomposition(std::int64_t n_parts);

/* Certified contribution of one HN segment a + ib to 2 h^0 - chi.
 *
 * t is the largest integer with t = a (mod 2) and t^2 <= D where D is the
 * smaller of the squared norm and the Brill-Noether discriminant, so that
 * h^0(segment) <= (chi_seg + t)/2.  If k = gcd(a, b) >= 2 and the class
 *   w = ((a - t)/2, b, (-a - t)/2)
 * realizing equality is primitive with w^2 < -2((k-1)^2 + 1), equality is
 * impossible (the semistable factors cannot all coincide) and t drops by 2. */
struct EdgeBound {
  std::int64_t t = 0;
  bool used_bn = false;        /* the Brill-Noether discriminant was the binding one */
  bool primitive = true;       /* gcd(a, b) == 1 */
  bool square_rule = false;    /* the decomposition refinement fired */
  std::int64_t k = 1;          /* gcd(a, b) */
  std::string rule() const;
};
EdgeBound edge_bound(std::int64_t a, std::int64_t b, const Surface& X);

/* Per-edge refined bound of a chain: (chi + sum t_e)/2. */
struct RefinedChainBound {
  Integer bound;
  std::vector<EdgeBound> edges;
};
RefinedChainBound refined_chain_bound(const Chain& ch, const Integer& chi, const Surface& X);

/* Minimum over all vertex groupings of the parity-refined bound (shortest
 * path over group boundaries). */
struct GroupingBound {
  Integer bound;
  std::vector<std::size_t> boundaries;
};
GroupingBound best_grouping_bound(const Chain& ch, const Integer& chi, const Surface& X);

}  // namespace k3wall

#endif  // K3WALL_HZERO_HPP
