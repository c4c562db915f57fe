/* SPDX-License-Identifier: Apache-2.0
 *
 * polysearch.cpp -- the triangle, its lattice points, the two-phase polygon
 * verdict and the envelope route.
 */
#include "k3wall/polysearch.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chain_dp_internal.hpp"

namespace k3wall {

namespace {

__int128 orient_i(const GaussPoint& a, const GaussPoint& b, const GaussPoint& c) {
  return static_cast<__int128>(b.a - a.a) * (c.b - a.b) - static_cast<__int128>(b.b - a.b) * (c.a - a.a);
}

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

/* Closed simple polygon containment (boundary included), by crossing count. */
bool closed_polygon_contains(const std::vector<RatPoint>& poly, const RatPoint& pt) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& a = poly[i];
    const RatPoint& b = poly[(i + 1) % n];
    if (on_closed_segment(pt, a, b)) return true;
    if ((a.y > pt.y) != (b.y > pt.y)) {
      Rational x = a.x + (pt.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x > pt.x) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

Triangle triangle(const Surface& X) {
  const std::int64_t p = X.p(), m = min_nondivisor(p);
  Triangle t;
  t.p = p;
  t.m = m;
  t.o = GaussPoint{0, 0};
  t.z1 = GaussPoint{m * m - p, m};
  t.z2 = GaussPoint{m * m * p - 2 * p * m, m * m};
  t.z1_prime = RatPoint{q(m - 1, m) * q(m * m - p), q(m - 1)};
  t.z2_prime = RatPoint{q(-p, m) + q(m * m) - q(m, m - 1), q(m + 1)};
  if (orient_i(t.o, t.z1, t.z2) == 0) throw std::logic_error("triangle: degenerate");
  return t;
}

bool triangle_contains(const Triangle& t, const GaussPoint& pt) {
  const __int128 s = orient_i(t.o, t.z1, t.z2);
  const __int128 a = orient_i(t.o, t.z1, pt), b = orient_i(t.z1, t.z2, pt), c = orient_i(t.z2, t.o, pt);
  if (s > 0) return a >= 0 && b >= 0 && c >= 0;
  return a <= 0 && b <= 0 && c <= 0;
}

std::vector<GaussPoint> lattice_points(const Triangle& t) {
  std::int64_t xmin = std::min({t.o.a, t.z1.a, t.z2.a}), xmax = std::max({t.o.a, t.z1.a, t.z2.a});
  std::int64_t ymin = std::min({t.o.b, t.z1.b, t.z2.b}), ymax = std::max({t.o.b, t.z1.b, t.z2.b});
  std::vector<GaussPoint> out;
  for (std::int64_t y = ymin; y <= ymax; ++y)
    for (std::int64_t x = xmin; x <= xmax; ++x)
      if (triangle_contains(t, GaussPoint{x, y})) out.push_back(GaussPoint{x, y});
  return out;
}

const char* to_string(SearchMode m) { return m == SearchMode::Plain ? "plain" : "refined"; }

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Verified: return "Verified";
    case VerdictStatus::Failed: return "Failed";
    case VerdictStatus::ResourceCapped: return "ResourceCapped";
  }
  return "?";
}

namespace {

std::string rule_log(const Chain& ch, const RefinedChainBound& rb, const GroupingBound& gb) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rb.edges.size(); ++i) {
    GaussPoint d = ch.vertices[i + 1] - ch.vertices[i];
    if (i) os << "; ";
    os << d.to_string() << ": t=" << rb.edges[i].t << " [" << rb.edges[i].rule() << "]";
  }
  os << "; best grouping at vertices {";
  for (std::size_t i = 0; i < gb.boundaries.size(); ++i) os << (i ? "," : "") << gb.boundaries[i];
  os << "}";
  return os.str();
}

}  // namespace

Verdict max_interior_bound(const Surface& X, SearchMode mode, const SearchOptions& opt) {
  using detail::Clock;
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(opt.budget_sec));
  const Triangle t = triangle(X);
  Verdict v;
  v.p = t.p;
  v.m = t.m;
  v.mode = mode;
  v.chi = Integer(2 * t.p * t.m - t.m * t.m * t.p);
  v.target = Integer(t.p + t.m * t.m);
  v.triangle_floor = polygon_bound(Chain::normalized({t.o, t.z1, t.z2}), v.chi, X).floor;

  std::vector<GaussPoint> pts = lattice_points(t);
  v.lattice_count = pts.size();
  /* Any chain through z1 that stays in the triangle is the triangle path. */
  std::vector<GaussPoint> allowed;
  for (const auto& g : pts)
    if (!(g == t.z1)) allowed.push_back(g);

  auto capped = [&](const std::string& what) {
    v.status = VerdictStatus::ResourceCapped;
    v.note = what + " exceeded the budget of " + std::to_string(opt.budget_sec) + " s";
    return v;
  };

  if (mode == SearchMode::Plain) {
    auto r = detail::max_plain_chain(allowed, t.z2, X, deadline);
    if (!r) return capped("plain chain search");
    if (!r->reachable) throw std::logic_error("no interior chain reaches z2");
    v.witness = r->witness;
    v.witness_plain_floor = polygon_bound(r->witness, v.chi, X).floor;
    v.max_interior_bound = v.witness_plain_floor;
  } else {
    auto r = detail::max_refined_chain(allowed, t.z2, X, deadline);
    if (!r) return capped("refined chain search");
    if (!r->reachable) throw std::logic_error("no interior chain reaches z2");
    v.witness = r->witness;
    v.witness_plain_floor = polygon_bound(r->witness, v.chi, X).floor;
    Integer sum = v.chi + Integer(static_cast<long>(r->sum_t));
    if (mpz_odd_p(sum.get_mpz_t())) throw std::logic_error("refined chain search: parity violated");
    v.max_interior_bound = sum / 2;
    /* cross-check the witness against the direct evaluation */
    if (refined_chain_bound(r->witness, v.chi, X).bound != v.max_interior_bound)
      throw std::logic_error("refined chain search: witness re-evaluation differs");

    if (opt.phase2) {
      /* chains whose plain bound reaches p + m^2: length >= 2(p + m^2) - chi */
      std::vector<Chain> longs;
      auto complete = detail::enumerate_long_chains(allowed, t.z2, X, 2 * v.target - v.chi, opt.phase2_cap,
                                                    longs, deadline);
      if (!complete) return capped("enumeration of long chains");
      v.phase2_complete = *complete;
      for (auto& ch : longs) {
        RefinedCase rc;
        rc.chain = ch;
        rc.plain_floor = polygon_bound(ch, v.chi, X).floor;
        rc.per_edge = refined_chain_bound(ch, v.chi, X);
        rc.grouping = best_grouping_bound(ch, v.chi, X);
        rc.certified = std::min(rc.per_edge.bound, rc.grouping.bound);
        rc.rules = rule_log(ch, rc.per_edge, rc.grouping);
        if (rc.certified > v.max_interior_bound)
          throw std::logic_error("refined case exceeds the chain-search maximum: " + ch.to_string());
        v.refined_cases.push_back(std::move(rc));
      }
    }
  }

  const bool ok = v.max_interior_bound <= v.target - 1 && v.triangle_floor >= v.target;
  v.status = ok ? VerdictStatus::Verified : VerdictStatus::Failed;
  if (!ok && v.triangle_floor < v.target) v.note = "the triangle path does not reach p + m^2";
  else if (!ok) v.note = "an interior chain reaches p + m^2 under the " + std::string(to_string(mode)) + " bound";
  if (mode == SearchMode::Refined && !v.phase2_complete)
    v.note += (v.note.empty() ? "" : "; ") + std::string("enumeration of long chains truncated at ") +
              std::to_string(opt.phase2_cap) + " (the verdict rests on the chain search maximum)";
  return v;
}

EnvelopeCheck envelope_check(const Surface& X) {
  const Triangle t = triangle(X);
  const std::int64_t p = t.p, m = t.m;
  const Integer chi(2 * p * m - m * m * p);
  const Integer N(p + m * m);
  EnvelopeCheck e;
  e.q1 = GaussPoint{t.z1.a + 1, t.z1.b};
  e.q2 = GaussPoint{t.z1.a + 2, t.z1.b};
  const RatPoint o = t.o.rat(), z1p = t.z1_prime, q1 = e.q1.rat(), q2 = e.q2.rat(), z2p = t.z2_prime,
                 z2 = t.z2.rat();

  RadicalSum len = norm(z1p - o, X) + norm(q2 - z1p, X) + norm(z2p - q2, X) + norm(z2 - z2p, X);
  e.h = RadicalSum::from_rational(Rational(chi, 2)) + len * q(1, 2);
  e.floor_h = radical_floor(e.h);
  e.floor_h_ok = e.floor_h <= N - 1;

  /* |z2' z2| = (m^2-m-1)/(m^2-m) sqrt((p(m-1)^2 - m^2)^2 + (4p+4)(m^2-m)^2) */
  {
    Integer a(p * (m - 1) * (m - 1) - m * m), b(m * m - m);
    RadicalSum closed = RadicalSum::sqrt_of(Integer(a * a + Integer(4 * p + 4) * b * b)) * q(m * m - m - 1, m * m - m);
    e.factor_form_agrees = radical_cmp(closed, norm(z2 - z2p, X)) == Ordering::Equal;
  }

  Envelope env{{o, z1p, q1, z2p, z2}};
  e.h_prime = parity_refined_bound(env, {0, 2, 4}, chi, X);
  e.q1_odd = (e.q1.a % 2) != 0;
  e.h_prime_ok = e.h_prime <= N - 1;

  /* lattice points of the triangle outside the (non-convex) closed pentagon
   * o z1' q2 z2' z2 */
  const std::vector<RatPoint> pent{o, z2, z2p, q2, z1p};
  std::vector<GaussPoint> outside;
  for (const auto& g : lattice_points(t))
    if (!closed_polygon_contains(pent, g.rat())) outside.push_back(g);
  std::vector<GaussPoint> expect{t.z1, e.q1};
  std::sort(outside.begin(), outside.end());
  std::sort(expect.begin(), expect.end());
  e.outside_points_ok = outside == expect;
  return e;
}

}  // namespace k3wall
