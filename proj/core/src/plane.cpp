/* SPDX-License-Identifier: Apache-2.0
 *
 * plane.cpp -- projections, central charges, V(X) membership, the grey
 * region and bounded root enumeration.
 */
#include "k3wall/plane.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace k3wall {

std::string RatPoint::to_string() const {
  return "(" + x.get_str() + ", " + y.get_str() + ")";
}

Rational orient(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool collinear(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  return sgn(orient(a, b, c)) == 0;
}

bool on_closed_segment(const RatPoint& q, const RatPoint& a, const RatPoint& b) {
  if (!collinear(a, b, q)) return false;
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= q.y &&
         q.y <= std::max(a.y, b.y);
}

bool on_open_segment(const RatPoint& q, const RatPoint& a, const RatPoint& b) {
  return on_closed_segment(q, a, b) && !(q == a) && !(q == b);
}

RatPoint project(const MukaiVector& a) {
  if (a.is_zero()) throw std::domain_error("projection undefined: zero vector");
  if (sgn(a.s) == 0) throw std::domain_error("projection undefined");
  return RatPoint{make_rational(a.c, a.s), make_rational(a.r, a.s)};
}

Charge central_charge(const MukaiVector& a, const Rational& b, const Rational& w_sq,
                      const Surface& X) {
  if (sgn(w_sq) <= 0) throw std::domain_error("central_charge: w^2 must be positive");
  const Rational h2(X.h_sq());
  Charge z;
  z.re = Rational(a.c) * b * h2 - Rational(a.r) * h2 / 2 * (b * b - w_sq) - Rational(a.s);
  z.im = Rational(a.c) - Rational(a.r) * b;
  z.re.canonicalize();
  z.im.canonicalize();
  return z;
}

namespace {
void check_heart_phase(const Charge& z) {
  if (z.is_zero()) throw std::domain_error("vector in kernel of Z");
  if (sgn(z.im) < 0 || (sgn(z.im) == 0 && sgn(z.re) > 0))
    throw std::domain_error("not a heart phase");
}
}  // namespace

Ordering phase_compare(const Charge& z1, const Charge& z2) {
  check_heart_phase(z1);
  check_heart_phase(z2);
  const bool top1 = sgn(z1.im) == 0, top2 = sgn(z2.im) == 0; /* phase exactly 1 */
  if (top1 || top2) {
    if (top1 && top2) return Ordering::Equal;
    return top1 ? Ordering::Greater : Ordering::Less;
  }
  /* cross > 0 means z2 is counterclockwise of z1, i.e. has larger phase */
  Rational cross = z1.re * z2.im - z2.re * z1.im;
  return ordering_of(-sgn(cross));
}

RatPoint kernel_point(const Rational& b, const Rational& w_sq, const Surface& X) {
  if (sgn(w_sq) <= 0) throw std::domain_error("kernel_point: w^2 must be positive");
  Rational denom = Rational(X.h_sq()) * (b * b + w_sq);
  RatPoint k{2 * b / denom, Rational(2) / denom};
  k.x.canonicalize();
  k.y.canonicalize();
  return k;
}

bool above_parabola(const RatPoint& pt, const Surface& X) {
  return pt.y > Rational(X.p()) * pt.x * pt.x;
}

Segment hole_segment(const MukaiVector& delta, const Surface& X) {
  if (!is_root(delta, X)) throw std::domain_error("hole_segment: not a root");
  if (sgn(delta.s) == 0) throw std::domain_error("projection undefined");
  RatPoint pd = project(delta);
  if (!above_parabola(pd, X)) throw std::domain_error("root outside cone");
  RatPoint qd;
  if (sgn(pd.x) == 0) {
    qd = RatPoint{Rational(0), Rational(0)};
  } else {
    Rational t = pd.y / pd.x;
    qd = RatPoint{t / X.p(), t * t / X.p()};
  }
  return Segment{pd, qd, false, false};
}

namespace {

/* Primitive integer direction (u, v) of a nonzero rational vector. */
std::pair<Integer, Integer> primitive_direction(const Rational& x, const Rational& y) {
  Integer u = x.get_num() * y.get_den();
  Integer v = y.get_num() * x.get_den();
  Integer g = gcd(u, v);
  return {u / g, v / g};
}

}  // namespace

std::optional<MukaiVector> root_on_ray(const RatPoint& direction, const Surface& X) {
  if (sgn(direction.y) <= 0) return std::nullopt; /* roots with s > 0 project to y > 0 */
  auto [u, v] = primitive_direction(direction.x, direction.y);
  Integer n = Integer(X.p()) * u * u + 1;
  if (n % v != 0) return std::nullopt;
  return MukaiVector(v, u, n / v);
}

const char* to_string(VStatus s) {
  switch (s) {
    case VStatus::Inside: return "Inside";
    case VStatus::OnHole: return "OnHole";
    case VStatus::OutsideCone: return "OutsideCone";
    case VStatus::Unknown: return "Unknown";
  }
  return "?";
}

VMembership in_V(const RatPoint& pt, const Surface& X, std::int64_t s_max) {
  if (s_max < 1) throw std::invalid_argument("in_V: s_max must be >= 1");
  VMembership res{VStatus::Inside, std::nullopt, s_max, ""};
  if (!above_parabola(pt, X)) {
    res.status = VStatus::OutsideCone;
    res.reason = "outside cone: y <= p x^2";
    return res;
  }
  auto delta = root_on_ray(pt, X);
  if (!delta) {
    res.reason = "no root projects onto the ray through the point";
    return res;
  }
  Segment hole = hole_segment(*delta, X);
  if (on_closed_segment(pt, hole.a, hole.b)) {
    res.status = VStatus::OnHole;
    res.witness = delta;
    res.reason = "on the hole of " + delta->to_string();
  } else {
    res.reason = "the only root on this ray is " + delta->to_string() + "; its hole misses the point";
  }
  return res;
}

GreyVertices grey_vertices(const Surface& X) {
  const long p = X.p();
  const long m = min_nondivisor(p);
  GreyVertices g;
  g.o = RatPoint{Rational(0), Rational(0)};
  g.p_v = RatPoint{make_rational(m, p), make_rational(m * m, p)};
  g.p_u = RatPoint{make_rational(-m, p * (m - 1)), make_rational(m * m, p * (m - 1) * (m - 1))};
  g.q = RatPoint{make_rational(-1, m), make_rational(p, m * m)};
  g.o_prime = RatPoint{Rational(0), Rational(1)};
  return g;
}

Region grey_region(const Surface& X) {
  GreyVertices g = grey_vertices(X);
  Region r;
  /* counterclockwise: o -> p_v -> q -> p_u */
  r.vertices = {g.o, g.p_v, g.q, g.p_u};
  r.edge_open_included = {true, true, true, true};
  /* the closed piece [o', p_v] of the edge p_v -> q is not part of the region */
  r.excluded_pieces = {Segment{g.o_prime, g.p_v, false, false}};
  return r;
}

bool region_contains(const Region& reg, const RatPoint& pt, const Surface& X) {
  const std::size_t n = reg.vertices.size();
  int on_edge = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& a = reg.vertices[i];
    const RatPoint& b = reg.vertices[(i + 1) % n];
    int s = sgn(orient(a, b, pt));
    if (s < 0) return false;
    if (s == 0) {
      if (!on_closed_segment(pt, a, b)) return false;
      if (pt == a || pt == b) return false; /* vertices are excluded */
      on_edge = static_cast<int>(i);
    }
  }
  if (on_edge >= 0 && !reg.edge_open_included[static_cast<std::size_t>(on_edge)]) return false;
  for (const auto& piece : reg.excluded_pieces)
    if (on_closed_segment(pt, piece.a, piece.b)) return false;
  if (reg.clip_to_cone && !above_parabola(pt, X)) return false;
  return true;
}

bool grey_contains(const RatPoint& pt, const Surface& X) {
  return region_contains(grey_region(X), pt, X);
}

const char* to_string(ProofStatus s) { return s == ProofStatus::Proved ? "Proved" : "Failed"; }

std::vector<SegmentCertificate> grey_segment_certificates(const Surface& X) {
  const long p = X.p();
  const long m = min_nondivisor(p);
  /* Each open segment starts at o, so it lies on one ray; by the root-on-ray
   * lemma the ray carries a root iff v | p u^2 + 1. */
  struct Ray {
    const char* name;
    long u, v;
    const char* why;
  };
  const Ray rays[] = {
      {"(op_v)", 1, m, "direction (1, m): a root would need m | p + 1, contradicting the choice of m"},
      {"(oq)", -m, p, "direction (-m, p): a root would need p | p m^2 + 1, i.e. p | 1"},
      {"(op_u)", -(m - 1), m,
       "direction (-(m-1), m): p (m-1)^2 + 1 = p + 1 (mod m), so a root would need m | p + 1"},
  };
  std::vector<SegmentCertificate> out;
  for (const auto& r : rays) {
    Integer n = Integer(p) * r.u * r.u + 1;
    Integer res = n % Integer(r.v);
    SegmentCertificate c{r.name, sgn(res) != 0 ? ProofStatus::Proved : ProofStatus::Failed,
                         r.u, r.v, res, r.why};
    out.push_back(c);
  }
  return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * b % m);
    b = static_cast<u64>(static_cast<u128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

/* Square root of a quadratic residue a modulo an odd prime q (Tonelli-Shanks). */
u64 sqrt_mod(u64 a, u64 q) {
  a %= q;
  if (a == 0) return 0;
  if (q % 4 == 3) return pow_mod(a, (q + 1) / 4, q);
  u64 s = q - 1, e = 0;
  while (s % 2 == 0) {
    s /= 2;
    ++e;
  }
  u64 z = 2;
  while (pow_mod(z, (q - 1) / 2, q) != q - 1) ++z;
  u64 x = pow_mod(a, (s + 1) / 2, q), b = pow_mod(a, s, q), g = pow_mod(z, s, q), r = e;
  while (b != 1) {
    u64 t = b, i = 0;
    while (t != 1) {
      t = static_cast<u64>(static_cast<u128>(t) * t % q);
      ++i;
    }
    u64 gs = g;
    for (u64 j = 0; j + 1 < r - i; ++j) gs = static_cast<u64>(static_cast<u128>(gs) * gs % q);
    x = static_cast<u64>(static_cast<u128>(x) * gs % q);
    g = static_cast<u64>(static_cast<u128>(gs) * gs % q);
    b = static_cast<u64>(static_cast<u128>(b) * g % q);
    r = i;
  }
  return x;
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<u64> ps;
  for (u64 i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    ps.push_back(i);
    for (u64 j = i * i; j <= n; j += i) comp[j] = true;
  }
  return ps;
}

u64 isqrt_u64(u64 n) {
  Integer r = isqrt(Integer(static_cast<unsigned long>(n)));
  return r.get_ui();
}

}  // namespace

RootScan enumerate_roots_in_region(const Region& reg, const Surface& X, std::int64_t s_max) {
  if (s_max < 1) throw std::invalid_argument("enumerate_roots_in_region: s_max must be >= 1");
  RootScan scan;
  scan.s_max = s_max;
  scan.certificates = grey_segment_certificates(X);
  if (reg.vertices.empty()) return scan;

  Rational xmin = reg.vertices[0].x, xmax = xmin, ymax = reg.vertices[0].y;
  for (const auto& v : reg.vertices) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymax = std::max(ymax, v.y);
  }
  /* A root (r, c, s) with s > 0 projecting into the region has
   * c in [xmin s, xmax s] and r = (p c^2 + 1)/s. */
  const Integer c_lo = floor_of(xmin * Rational(s_max));
  const Integer c_hi = ceil_of(xmax * Rational(s_max));
  const u64 C = Integer(std::max(Integer(abs(c_lo)), Integer(abs(c_hi)))).get_ui();
  const u64 p = static_cast<u64>(X.p());
  const u128 n_max = static_cast<u128>(p) * C * C + 1;
  if (n_max >> 62) throw std::length_error("enumerate_roots_in_region: search range too large");

  /* Sieve-factor N(c) = p c^2 + 1 for 0 <= c <= C. */
  std::vector<u64> rest(C + 1);
  std::vector<std::vector<std::pair<u64, int>>> fac(C + 1);
  for (u64 c = 0; c <= C; ++c) rest[c] = p * c * c + 1;
  auto strip = [&](u64 c, u64 q) {
    int e = 0;
    while (rest[c] % q == 0) {
      rest[c] /= q;
      ++e;
    }
    if (e) fac[c].push_back({q, e});
  };
  for (u64 q : primes_up_to(isqrt_u64(static_cast<u64>(n_max)) + 1)) {
    if (q == p) continue; /* N(c) = 1 mod p */
    if (q == 2) {
      for (u64 c = 1; c <= C; c += 2) strip(c, 2);
      continue;
    }
    /* p c^2 = -1 (mod q)  <=>  c^2 = -p^{-1} (mod q) */
    u64 inv_p = pow_mod(p % q, q - 2, q);
    u64 a = (q - inv_p) % q;
    if (pow_mod(a, (q - 1) / 2, q) != 1) continue;
    /* a != 0 (mod q), so the two square roots t and q - t are distinct */
    u64 t = sqrt_mod(a, q);
    for (u64 r0 : {t, q - t})
      for (u64 c = r0; c <= C; c += q) strip(c, q);
  }
  for (u64 c = 0; c <= C; ++c)
    if (rest[c] > 1) fac[c].push_back({rest[c], 1});

  const Surface& S = X;
  auto visit = [&](long long c, u64 n) {
    const auto& f = fac[static_cast<u64>(c < 0 ? -c : c)];
    std::function<void(std::size_t, u64)> rec = [&](std::size_t i, u64 d) {
      if (d > static_cast<u64>(s_max)) return;
      if (i == f.size()) {
        ++scan.candidates_checked;
        const long long s = static_cast<long long>(d);
        /* quick integer pre-filter on x = c/s */
        Rational x = make_rational(c, s);
        if (x < xmin || x > xmax) return;
        const u64 r = n / d;
        MukaiVector delta(Integer(static_cast<unsigned long>(r)), Integer(static_cast<long>(c)),
                          Integer(static_cast<long>(s)));
        RatPoint pt = project(delta);
        if (pt.y > ymax) return;
        if (region_contains(reg, pt, S)) scan.roots.push_back(delta);
        return;
      }
      u64 pe = 1;
      for (int e = 0; e <= f[i].second; ++e) {
        if (e > 0) {
          if (pe > static_cast<u64>(s_max) / f[i].first + 1) break;
          pe *= f[i].first;
        }
        if (static_cast<u128>(d) * pe > static_cast<u128>(s_max)) break;
        rec(i + 1, d * pe);
      }
    };
    rec(0, 1);
  };
  for (long long c = c_lo.get_si(); c <= c_hi.get_si(); ++c) {
    const u64 ac = static_cast<u64>(c < 0 ? -c : c);
    visit(c, p * ac * ac + 1);
  }
  std::sort(scan.roots.begin(), scan.roots.end(), [](const MukaiVector& a, const MukaiVector& b) {
    if (a.s != b.s) return a.s < b.s;
    if (a.c != b.c) return a.c < b.c;
    return a.r < b.r;
  });
  return scan;
}

}  // namespace k3wall
