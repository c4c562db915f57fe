/* SPDX-License-Identifier: Apache-2.0
 *
 * polysearch.hpp -- the polygon verifier.
 *
 * For w = v(i_*F) = (0, m^2, 2pm - m^2 p) the Harder-Narasimhan polygon of a
 * destabilized object is a convex lattice chain from o to z2 = Zbar(w) inside
 * the triangle o z1 z2, z1 = Zbar(v).  The verifier maximizes certified
 * h^0-bounds over every such chain other than the triangle itself and checks
 * that the maximum stays below the Brill-Noether count p + m^2, while the
 * triangle reaches it.
 */
#ifndef K3WALL_POLYSEARCH_HPP
#define K3WALL_POLYSEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3wall/hzero.hpp"
#include "k3wall/walls.hpp"

namespace k3wall {

struct Triangle {
  GaussPoint o, z1, z2;
  RatPoint z1_prime; /* ((m-1)/m (m^2 - p), m - 1) */
  RatPoint z2_prime; /* (-p/m + m^2 - m/(m-1), m + 1) */
  std::int64_t p = 0, m = 0;
};
Triangle triangle(const Surface& X);

/* Every lattice point weakly inside the triangle, sorted by (b, a). */
std::vector<GaussPoint> lattice_points(const Triangle& t);
bool triangle_contains(const Triangle& t, const GaussPoint& q);

/* ---------------------------------------------------------------------------
 * Convex-chain optimization over an arbitrary finite point set.
 *
 * A chain runs from o to `target` through points of `allowed` (which must
 * contain both); consecutive edges turn strictly clockwise.  The plain
 * objective is the sum of edge norms; the refined objective is the sum of
 * per-edge certified contributions t_e (see edge_bound).
 * ------------------------------------------------------------------------- */
struct PlainChainResult {
  bool reachable = false;
  Chain witness;             /* lexicographically least among the maximizers */
  RadicalSum length;         /* exact sum of edge norms of the witness */
  std::size_t relaxations = 0;
  std::size_t exact_comparisons = 0; /* interval overlaps settled exactly */
};
PlainChainResult max_plain_chain(const std::vector<GaussPoint>& allowed, const GaussPoint& target,
                                 const Surface& X);

struct RefinedChainResult {
  bool reachable = false;
  Chain witness;             /* first maximizer found in processing order */
  std::int64_t sum_t = 0;    /* sum of t_e along the witness */
  std::size_t relaxations = 0;
};
RefinedChainResult max_refined_chain(const std::vector<GaussPoint>& allowed, const GaussPoint& target,
                                     const Surface& X);

/* Every chain whose plain length is >= min_length (exactly), in depth-first
 * order, stopping after `cap` chains.  Returns true when the enumeration was
 * complete. */
bool enumerate_long_chains(const std::vector<GaussPoint>& allowed, const GaussPoint& target,
                           const Surface& X, const Integer& min_length, std::size_t cap,
                           std::vector<Chain>& out);

/* ---------------------------------------------------------------------------
 * Verdicts.
 * ------------------------------------------------------------------------- */
enum class SearchMode { Plain, Refined };
const char* to_string(SearchMode m);

enum class VerdictStatus { Verified, Failed, ResourceCapped };
const char* to_string(VerdictStatus s);

struct RefinedCase {
  Chain chain;
  Integer plain_floor;        /* floor(chi/2 + length/2) */
  RefinedChainBound per_edge; /* (chi + sum t_e)/2 with the rule of every edge */
  GroupingBound grouping;     /* best parity grouping */
  Integer certified;          /* min of the two */
  std::string rules;          /* human-readable rule log */
};

struct SearchOptions {
  double budget_sec = 600.0;
  std::size_t phase2_cap = 100000;
  bool phase2 = true;
};

struct Verdict {
  std::int64_t p = 0, m = 0;
  SearchMode mode = SearchMode::Refined;
  Integer chi;                  /* chi(i_*F) = 2pm - m^2 p */
  Integer target;               /* p + m^2 */
  Integer triangle_floor;       /* plain bound of the triangle path */
  Integer max_interior_bound;   /* max over interior chains of the certified bound */
  Chain witness;                /* a chain attaining max_interior_bound */
  Integer witness_plain_floor;
  std::size_t lattice_count = 0;
  std::vector<RefinedCase> refined_cases; /* chains with plain floor >= p + m^2 */
  bool phase2_complete = true;
  VerdictStatus status = VerdictStatus::Failed;
  std::string note;
};
Verdict max_interior_bound(const Surface& X, SearchMode mode, const SearchOptions& opt = {});

/* ---------------------------------------------------------------------------
 * The envelope route: chains inside the pentagon o z1' q2 z2' z2 are bounded
 * by its perimeter; the lattice points of the triangle outside it are z1 and
 * q1 = z1 + 1, and chains through q1 are bounded by two parity groups.
 * ------------------------------------------------------------------------- */
struct EnvelopeCheck {
  GaussPoint q1, q2;
  RadicalSum h;                 /* chi/2 + half the pentagon length */
  Integer floor_h;
  bool factor_form_agrees = false; /* closed form of |z2' z2| matches */
  Integer h_prime;              /* two-group parity bound through q1 */
  bool q1_odd = false;          /* parity of Re q1 (selects the route) */
  bool outside_points_ok = false; /* lattice points outside the pentagon are {z1, q1} */
  bool floor_h_ok = false;      /* floor(h) <= p + m^2 - 1 */
  bool h_prime_ok = false;      /* h' <= p + m^2 - 1 */
  bool passes() const { return floor_h_ok && h_prime_ok && outside_points_ok; }
};
EnvelopeCheck envelope_check(const Surface& X);

/* ---------------------------------------------------------------------------
 * Large p: 2 eps < l - l_in.
 * ------------------------------------------------------------------------- */
struct LargePCertificate {
  bool applicable = false;
  std::int64_t p = 0, m = 0;
  RadicalSum epsilon2; /* 2 eps = l + p(2m - m^2) - 2(p + m^2) */
  RadicalSum gap;      /* l - l_in */
  bool verdict = false; /* epsilon2 < gap, decided exactly */
  Rational f1;          /* rational upper bound for 2 eps */
  RadicalSum f2, f3;    /* lower bounds for the two parts of the gap */
  bool f1_bounds_eps = false; /* 2 eps <= f1 */
  bool f23_bounds_gap = false; /* f2 + f3 <= gap */
  /* Which argument covers p: "m=3", "m=4", "m=4 direct", "m=5", "m=7" or
   * "large"; together with the thresholds it uses. */
  std::string route;
  std::optional<Rational> eps_threshold, gap_threshold;
  bool route_holds = false;
  /* Bucket claimed in the printed lists (0 if the prime is not listed). */
  int listed_bucket = 0;
  std::string note;
};
LargePCertificate large_p_certificate(std::int64_t p);

/* The prime lists printed for the intermediate range, keyed by m. */
struct BucketList {
  int m;
  std::vector<std::int64_t> primes;
};
const std::vector<BucketList>& listed_buckets();
/* The same lists recomputed from min_nondivisor. */
std::vector<BucketList> derived_buckets();

/* ---------------------------------------------------------------------------
 * Endgame of the main theorem.
 * ------------------------------------------------------------------------- */
struct EndgameK {
  std::int64_t k;
  Integer square;          /* <v_k, v_k> for v_k = (m^2 - k, m, p - k) */
  bool square_admissible;  /* square >= -2 m^2 */
  Rational slope_lhs;      /* slope of the line pivot -> pr(v_k) */
  Rational slope_rhs;      /* slope of the line pivot -> p_v */
  int slope_sign;          /* sign(lhs - rhs) */
  WallVerdict wall;        /* classify_candidate_wall(pr(v_k)) */
};
struct EndgameChecks {
  bool gcd_ok = false;
  bool open_segment_lattice_free = false;
  bool square_iff_k_nonnegative = false;
  bool k_zero_unique = false; /* only k = 0 is both admissible and not below the first wall */
  bool strict_slope_fails_at_zero = false; /* the displayed strict inequality is an equality at k = 0 */
  std::vector<EndgameK> rows;
  bool all_ok() const { return gcd_ok && open_segment_lattice_free && square_iff_k_nonnegative && k_zero_unique; }
};
EndgameChecks theorem_endgame_checks(const Surface& X);

}  // namespace k3wall

#endif  // K3WALL_POLYSEARCH_HPP
