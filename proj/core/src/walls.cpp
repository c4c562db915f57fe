/* SPDX-License-Identifier: Apache-2.0
 *
 * walls.cpp -- wall lines, the first wall p_u -- p_v and wall clipping.
 */
#include "k3wall/walls.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3wall {

namespace {

void normalize_direction(Rational& dx, Rational& dy) {
  if (sgn(dx) == 0 && sgn(dy) == 0) throw std::domain_error("line: zero direction");
  if (sgn(dx) < 0 || (sgn(dx) == 0 && sgn(dy) < 0)) {
    dx = -dx;
    dy = -dy;
  }
  /* scale to a primitive integer direction so equal lines compare equal */
  Integer l = dx.get_den() * dy.get_den();
  Integer ix = dx.get_num() * (l / dx.get_den());
  Integer iy = dy.get_num() * (l / dy.get_den());
  Integer g = gcd(ix, iy);
  dx = Rational(ix / g);
  dy = Rational(iy / g);
}

}  // namespace

bool Line::contains(const RatPoint& pt) const {
  return sgn((pt.x - anchor.x) * dy - (pt.y - anchor.y) * dx) == 0;
}

RatPoint Line::at(const Rational& t) const {
  RatPoint r{anchor.x + t * dx, anchor.y + t * dy};
  r.x.canonicalize();
  r.y.canonicalize();
  return r;
}

std::string Line::to_string() const {
  return "line through " + anchor.to_string() + " with direction (" + dx.get_str() + ", " +
         dy.get_str() + ")";
}

Line line_with_direction(const RatPoint& anchor, Rational dx, Rational dy) {
  normalize_direction(dx, dy);
  return Line{anchor, dx, dy};
}

Line line_through(const RatPoint& a, const RatPoint& b) {
  if (a == b) throw std::domain_error("line_through: coincident points");
  return line_with_direction(a, b.x - a.x, b.y - a.y);
}

std::optional<RatPoint> intersect(const Line& a, const Line& b) {
  Rational det = a.dx * b.dy - a.dy * b.dx;
  if (sgn(det) == 0) return std::nullopt;
  Rational ex = b.anchor.x - a.anchor.x, ey = b.anchor.y - a.anchor.y;
  Rational t = (ex * b.dy - ey * b.dx) / det;
  return a.at(t);
}

Line wall_line(const MukaiVector& e, const RatPoint& through) {
  if (e.is_zero()) throw std::domain_error("wall_line: zero vector");
  if (sgn(e.s) != 0) {
    RatPoint pe = project(e);
    if (pe == through) throw std::domain_error("wall_line: through-point equals pr(e)");
    return line_through(pe, through);
  }
  if (sgn(e.c) == 0) throw std::domain_error("wall_line: s = 0 requires c != 0");
  /* slope r/c: direction (c, r) */
  return line_with_direction(through, Rational(e.c), Rational(e.r));
}

Segment first_wall_segment(const Surface& X) {
  GreyVertices g = grey_vertices(X);
  return Segment{g.p_u, g.p_v, false, false};
}

RatPoint pushforward_pivot(const Surface& X) {
  return project(distinguished_vectors(X).w);
}

const char* to_string(WallVerdict v) {
  switch (v) {
    case WallVerdict::Below: return "Below";
    case WallVerdict::On: return "On";
    case WallVerdict::Above: return "Above";
  }
  return "?";
}

WallClassification classify_candidate_wall(const RatPoint& destabilizer_pr, const Surface& X) {
  const RatPoint pivot = pushforward_pivot(X);
  if (destabilizer_pr == pivot) throw std::domain_error("classify_candidate_wall: point equals pivot");
  GreyVertices g = grey_vertices(X);
  /* Directions from the pivot, oriented into the upper half plane. */
  auto up = [](Rational dx, Rational dy) {
    if (sgn(dy) < 0 || (sgn(dy) == 0 && sgn(dx) < 0)) {
      dx = -dx;
      dy = -dy;
    }
    return std::pair{dx, dy};
  };
  auto [fx, fy] = up(g.p_v.x - pivot.x, g.p_v.y - pivot.y);
  auto [cx, cy] = up(destabilizer_pr.x - pivot.x, destabilizer_pr.y - pivot.y);
  /* counterclockwise of the first-wall direction means a steeper line */
  int turn = sgn(fx * cy - fy * cx);
  WallClassification res;
  res.pivot = pivot;
  res.verdict = turn > 0 ? WallVerdict::Above : (turn < 0 ? WallVerdict::Below : WallVerdict::On);
  Line l = line_through(pivot, destabilizer_pr);
  res.q1 = intersect(l, line_through(g.o, g.p_u));
  res.q2 = intersect(l, line_through(g.o, g.p_v));
  return res;
}

Line brill_noether_line(const MukaiVector& e) {
  const RatPoint o_prime{Rational(0), Rational(1)};
  if (sgn(e.c) == 0 && sgn(e.s) == 0) {
    if (sgn(e.r) == 0) throw std::domain_error("brill_noether_line: zero vector");
    /* (r, 0, 0): slope r/c is vertical */
    return line_with_direction(o_prime, Rational(0), Rational(1));
  }
  if (sgn(e.s) != 0) {
    RatPoint pe = project(e);
    if (pe == o_prime) throw std::domain_error("coincides with o'");
    return line_through(o_prime, pe);
  }
  return line_with_direction(o_prime, Rational(e.c), Rational(e.r));
}

namespace {

/* Rational bracket [lo, hi] of (-b +- sqrt(D)) / (2a) roots, a < 0 or a > 0. */
Rational sqrt_lower(const Rational& d) {
  const unsigned bits = 40;
  Integer n = floor_of(d * Rational(Integer(1) << (2 * bits)));
  return Rational(isqrt(n), Integer(1) << bits);
}
Rational sqrt_upper(const Rational& d) { return sqrt_lower(d) + Rational(1, Integer(1) << 40); }

}  // namespace

WallClip clip_wall(const Line& line, const RatPoint& base, const Surface& X, std::int64_t s_max) {
  if (!line.contains(base)) throw std::domain_error("clip_wall: base point not on line");
  VMembership mb = in_V(base, X, s_max);
  if (mb.status != VStatus::Inside) throw std::domain_error("clip_wall: base point not in V(X)");
  WallClip clip{line, base, {}, {}, s_max};
  const Rational p(X.p());
  const Rational h = Rational(1, Integer(s_max) * Integer(s_max));
  /* f(t) = y(t) - p x(t)^2 along base + t (dx, dy) */
  auto f = [&](const Rational& t) {
    Rational x = base.x + t * line.dx, y = base.y + t * line.dy;
    return y - p * x * x;
  };
  if (sgn(line.dx) == 0) {
    clip.forward.note = "vertical line: the chord inside the parabola is unbounded upward";
  }
  /* Bounding box of the chord {f > 0}: f(t) = A t^2 + B t + C with A <= 0. */
  const Rational A = -p * line.dx * line.dx;
  const Rational B = line.dy - 2 * p * base.x * line.dx;
  const Rational C = base.y - p * base.x * base.x;
  Rational t_lo, t_hi;
  if (sgn(A) == 0) {
    /* vertical: bounded below by y > p x0^2 only */
    t_lo = -C / B - 1;
    t_hi = t_lo + 1;
  } else {
    Rational D = B * B - 4 * A * C;
    /* roots (-B -+ sqrt D)/(2A); with A < 0 the smaller root uses +sqrt */
    t_lo = (-B + sqrt_upper(D)) / (2 * A);
    t_hi = (-B - sqrt_upper(D)) / (2 * A);
  }
  RatPoint e1 = line.at(t_lo), e2 = line.at(t_hi);
  Region box;
  Rational xmin = std::min({e1.x, e2.x, Rational(0)}), xmax = std::max({e1.x, e2.x, Rational(0)});
  Rational ymax = std::max({e1.y, e2.y, Rational(0)});
  if (sgn(A) == 0) ymax = std::max(ymax, base.y) * 4 + 4;
  /* pad the box so no lattice-relevant point sits on an (excluded) corner */
  xmin -= 1;
  xmax += 1;
  ymax += 1;
  box.vertices = {RatPoint{xmin, Rational(-1)}, RatPoint{xmax, Rational(-1)}, RatPoint{xmax, ymax},
                  RatPoint{xmin, ymax}};
  box.edge_open_included = {true, true, true, true};
  box.clip_to_cone = true;
  RootScan scan = enumerate_roots_in_region(box, X, s_max);

  struct Hit {
    Rational t;
    MukaiVector root;
    RatPoint pt;
  };
  std::optional<Hit> best_fwd, best_bwd;
  for (const auto& delta : scan.roots) {
    Segment hole = hole_segment(delta, X);
    Line ray = line_through(hole.a, hole.b);
    auto x = intersect(line, ray);
    if (!x) continue;
    if (!on_closed_segment(*x, hole.a, hole.b)) continue;
    Rational t = sgn(line.dx) != 0 ? (x->x - base.x) / line.dx : (x->y - base.y) / line.dy;
    if (sgn(t) > 0) {
      if (!best_fwd || t < best_fwd->t) best_fwd = Hit{t, delta, *x};
    } else if (sgn(t) < 0) {
      if (!best_bwd || t > best_bwd->t) best_bwd = Hit{t, delta, *x};
    }
  }
  auto finish = [&](ClipEnd& end, const std::optional<Hit>& hit) {
    if (!end.note.empty()) return;
    if (!hit) {
      end.note = "no hole of a root with s <= " + std::to_string(s_max) +
                 " before the parabola; the end lies in the uncertified band";
      return;
    }
    end.hole_root = hit->root;
    end.point = hit->pt;
    if (f(Rational(0)) >= h && f(hit->t) >= h) {
      end.certified = true;
      end.note = "ends on the hole of " + hit->root.to_string();
    } else {
      end.note = "nearest hole within the bound is " + hit->root.to_string() +
                 ", but the path reaches the band of roots with s > " + std::to_string(s_max);
    }
  };
  finish(clip.forward, best_fwd);
  finish(clip.backward, best_bwd);
  return clip;
}

}  // namespace k3wall
