/* SPDX-License-Identifier: Apache-2.0
 *
 * hzero.cpp -- norms, the Brill-Noether bound, polygon bounds and their
 * parity / decomposition refinements.
 */
#include "k3wall/hzero.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace k3wall {

std::string GaussPoint::to_string() const {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

GaussPoint zbar(const MukaiVector& e) {
  Integer a = e.r - e.s;
  if (!a.fits_slong_p() || !e.c.fits_slong_p()) throw std::overflow_error("zbar: out of range");
  return GaussPoint{a.get_si(), e.c.get_si()};
}

namespace {

bool upper_direction(const GaussPoint& d) { return d.b > 0 || (d.b == 0 && d.a < 0); }

__int128 cross(const GaussPoint& u, const GaussPoint& v) {
  return static_cast<__int128>(u.a) * v.b - static_cast<__int128>(u.b) * v.a;
}

}  // namespace

Chain Chain::normalized(std::vector<GaussPoint> vertices) {
  if (vertices.empty() || !(vertices.front() == GaussPoint{0, 0}))
    throw std::invalid_argument("chain must start at the origin");
  Chain out;
  out.vertices.push_back(vertices.front());
  GaussPoint prev_dir{0, 0};
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    GaussPoint d = vertices[i] - vertices[i - 1];
    if (d == GaussPoint{0, 0}) throw std::invalid_argument("chain has a repeated vertex");
    if (!upper_direction(d))
      throw std::invalid_argument("chain edge " + d.to_string() + " leaves the upper half plane");
    if (!(prev_dir == GaussPoint{0, 0})) {
      __int128 c = cross(prev_dir, d);
      if (c > 0) throw std::invalid_argument("chain is not convex at vertex " + vertices[i - 1].to_string());
      if (c == 0) {
        /* same direction (both lie in the upper half plane): merge */
        out.vertices.back() = vertices[i];
        prev_dir = vertices[i] - out.vertices[out.vertices.size() - 2];
        continue;
      }
    }
    out.vertices.push_back(vertices[i]);
    prev_dir = d;
  }
  return out;
}

std::string Chain::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ", ";
    s += vertices[i].to_string();
  }
  return s + "]";
}

Integer norm_sq(const GaussPoint& g, const Surface& X) {
  Integer a(static_cast<long>(g.a)), b(static_cast<long>(g.b));
  return a * a + Integer(4 * X.p() + 4) * b * b;
}

Rational norm_sq(const RatPoint& g, const Surface& X) {
  return g.x * g.x + Rational(4 * X.p() + 4) * g.y * g.y;
}

RadicalSum norm(const GaussPoint& g, const Surface& X) { return RadicalSum::sqrt_of(norm_sq(g, X)); }
RadicalSum norm(const RatPoint& g, const Surface& X) { return RadicalSum::sqrt_of(norm_sq(g, X)); }

Integer bn_discriminant(std::int64_t a, std::int64_t b, const Surface& X) {
  if (a == 0 && b == 0) throw std::domain_error("class proportional to v(O_X); bound degenerate");
  Integer A(static_cast<long>(a)), B(static_cast<long>(b));
  Integer k = gcd(A, B);
  return A * A + Integer(4 * X.p()) * B * B + 4 * k * k;
}

Integer bn_bound_int(const MukaiVector& e, const Surface& X) {
  Integer a = e.r - e.s;
  if (sgn(a) == 0 && sgn(e.c) == 0)
    throw std::domain_error("class proportional to v(O_X); bound degenerate");
  Integer k = gcd(a, e.c);
  Integer D = a * a + Integer(4 * X.p()) * e.c * e.c + 4 * k * k;
  return floor_avg_sqrt(e.r + e.s, D);
}

Integer prop52_identity(const Surface& X) {
  const Integer p(static_cast<long>(X.p()));
  const Integer m(static_cast<long>(min_nondivisor(X.p())));
  const Integer A = p + m * m;
  const Integer D = 4 * p * m * m + (p - m * m) * (p - m * m) + 4;
  if (4 * p * m * m + (p - m * m) * (p - m * m) != A * A)
    throw std::logic_error("prop52_identity: 4pm^2 + (p-m^2)^2 != (p+m^2)^2");
  Integer value = floor_avg_sqrt(A, D);
  if (value != A) throw std::logic_error("prop52_identity: value differs from p + m^2");
  return value;
}

PolygonBound polygon_bound(const Chain& ch, const Integer& chi, const Surface& X) {
  RadicalSum total = RadicalSum::from_rational(Rational(chi, 2));
  for (std::size_t i = 0; i + 1 < ch.vertices.size(); ++i)
    total += norm(ch.vertices[i + 1] - ch.vertices[i], X) * Rational(1, 2);
  return PolygonBound{total, radical_floor(total)};
}

Envelope Envelope::of(const Chain& ch) {
  Envelope e;
  for (const auto& v : ch.vertices) e.vertices.push_back(v.rat());
  return e;
}

namespace {

void check_boundaries(const Envelope& env, const std::vector<std::size_t>& bnd) {
  if (env.vertices.size() < 2) throw std::invalid_argument("envelope needs at least two vertices");
  if (bnd.size() < 2 || bnd.front() != 0 || bnd.back() != env.vertices.size() - 1)
    throw std::invalid_argument("group boundaries must include both endpoints");
  for (std::size_t i = 0; i + 1 < bnd.size(); ++i)
    if (bnd[i] >= bnd[i + 1]) throw std::invalid_argument("group boundaries must increase");
  for (auto i : bnd) {
    const RatPoint& v = env.vertices[i];
    if (v.x.get_den() != 1 || v.y.get_den() != 1)
      throw std::invalid_argument("group boundary " + v.to_string() + " is not a lattice point");
  }
}

/* Returns 2*floor(...) - [odd] for one group: odd groups contribute
 * (chi_g - 1)/2 + floor((1 + L)/2), even ones chi_g/2 + floor(L/2). */
struct GroupTerm {
  Integer floor_part;
  bool odd;
};

GroupTerm group_term(const Envelope& env, std::size_t j, std::size_t k, const Surface& X) {
  RadicalSum L;
  for (std::size_t i = j; i < k; ++i) L += norm(env.vertices[i + 1] - env.vertices[i], X);
  Integer disp = env.vertices[k].x.get_num() - env.vertices[j].x.get_num();
  bool odd = mpz_odd_p(disp.get_mpz_t()) != 0;
  if (odd) L += RadicalSum::from_rational(Rational(1));
  return GroupTerm{radical_floor(L * Rational(1, 2)), odd};
}

}  // namespace

Integer parity_refined_bound(const Envelope& env, const std::vector<std::size_t>& bnd,
                             const Integer& chi_total, const Surface& X) {
  check_boundaries(env, bnd);
  Integer total_disp = env.vertices.back().x.get_num() - env.vertices.front().x.get_num();
  if (mpz_odd_p(Integer(chi_total - total_disp).get_mpz_t()))
    throw std::invalid_argument("parity mismatch between chi and the real displacement");
  Integer sum = 0;
  long odd = 0;
  for (std::size_t g = 0; g + 1 < bnd.size(); ++g) {
    GroupTerm t = group_term(env, bnd[g], bnd[g + 1], X);
    sum += t.floor_part;
    odd += t.odd ? 1 : 0;
  }
  return (chi_total - odd) / 2 + sum;
}

Integer parity_refined_bound(const Envelope& env, const std::vector<std::size_t>& bnd,
                             const std::vector<Integer>& chis, const Surface& X) {
  check_boundaries(env, bnd);
  if (chis.size() + 1 != bnd.size()) throw std::invalid_argument("one chi per group required");
  Integer total = 0;
  for (std::size_t g = 0; g + 1 < bnd.size(); ++g) {
    GroupTerm t = group_term(env, bnd[g], bnd[g + 1], X);
    bool chi_odd = mpz_odd_p(chis[g].get_mpz_t()) != 0;
    if (chi_odd != t.odd) throw std::invalid_argument("parity mismatch between chi and displacement");
    total += (chis[g] - (t.odd ? 1 : 0)) / 2 + t.floor_part;
  }
  return total;
}

Integer min_square_decomposition(std::int64_t n_parts) {
  if (n_parts <= 1) throw std::domain_error("min_square_decomposition: need at least two parts");
  Integer n(static_cast<long>(n_parts - 1));
  return -2 * (n * n + 1);
}

std::string EdgeBound::rule() const {
  std::string r = used_bn ? "brill-noether" : "norm";
  if (used_bn && !primitive) r += " (non-primitive segment)";
  if (square_rule) r += " + decomposition";
  return r;
}

EdgeBound edge_bound(std::int64_t a, std::int64_t b, const Surface& X) {
  EdgeBound e;
  const Integer N = norm_sq(GaussPoint{a, b}, X);
  const Integer D = bn_discriminant(a, b, X);
  auto parity_root = [a](const Integer& n) {
    Integer t = isqrt(n);
    if (mpz_odd_p(Integer(t - a).get_mpz_t())) t -= 1;
    return t;
  };
  Integer t_norm = parity_root(N);
  Integer t = t_norm;
  if (D < N) {
    Integer t_bn = parity_root(D);
    if (t_bn < t_norm) {
      t = t_bn;
      e.used_bn = true;
    }
  }
  e.k = gcd(Integer(static_cast<long>(a)), Integer(static_cast<long>(b))).get_si();
  e.primitive = e.k == 1;
  if (e.k >= 2) {
    Integer A(static_cast<long>(a)), B(static_cast<long>(b));
    MukaiVector w((A - t) / 2, B, (-A - t) / 2);
    if (w.is_primitive()) {
      Integer w_sq = 2 * Integer(X.p()) * B * B + (A * A - t * t) / 2;
      if (w_sq < min_square_decomposition(e.k)) {
        t -= 2;
        e.square_rule = true;
      }
    }
  }
  e.t = t.get_si();
  return e;
}

RefinedChainBound refined_chain_bound(const Chain& ch, const Integer& chi, const Surface& X) {
  RefinedChainBound out;
  Integer sum = chi;
  for (std::size_t i = 0; i + 1 < ch.vertices.size(); ++i) {
    GaussPoint d = ch.vertices[i + 1] - ch.vertices[i];
    EdgeBound e = edge_bound(d.a, d.b, X);
    sum += e.t;
    out.edges.push_back(e);
  }
  if (mpz_odd_p(sum.get_mpz_t())) throw std::invalid_argument("chi parity does not match the chain");
  out.bound = sum / 2;
  return out;
}

GroupingBound best_grouping_bound(const Chain& ch, const Integer& chi, const Surface& X) {
  Envelope env = Envelope::of(ch);
  const std::size_t n = env.vertices.size();
  /* cost(j,k) = 2 floor_part - [odd]; total bound = (chi + sum cost)/2 */
  std::vector<Integer> best(n);
  std::vector<std::size_t> from(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  best[0] = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      GroupTerm t = group_term(env, j, k, X);
      Integer c = best[j] + 2 * t.floor_part - (t.odd ? 1 : 0);
      if (!seen[k] || c < best[k]) {
        best[k] = c;
        from[k] = j;
        seen[k] = true;
      }
    }
  }
  GroupingBound g;
  g.bound = (chi + best[n - 1]) / 2;
  for (std::size_t k = n - 1;; k = from[k]) {
    g.boundaries.insert(g.boundaries.begin(), k);
    if (k == 0) break;
  }
  return g;
}

}  // namespace k3wall
