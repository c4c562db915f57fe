/* SPDX-License-Identifier: Apache-2.0
 *
 * mukai.cpp -- Mukai lattice arithmetic and the distinguished classes.
 */
#include "k3wall/mukai.hpp"

#include <sstream>
#include <stdexcept>

namespace k3wall {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Surface::Surface(std::int64_t p) : p_(p) {
  if (p < 13 || !is_prime(p))
    throw std::invalid_argument("Surface: p must be a prime >= 13, got " + std::to_string(p));
}

Surface Surface::from_genus(std::int64_t g) { return Surface(g - 1); }

Integer MukaiVector::content() const { return gcd(gcd(r, c), s); }

std::string MukaiVector::to_string() const {
  std::ostringstream os;
  os << "(" << r.get_str() << "," << c.get_str() << "," << s.get_str() << ")";
  return os.str();
}

Integer pairing(const MukaiVector& a, const MukaiVector& b, const Surface& X) {
  return a.c * b.c * X.h_sq() - a.r * b.s - b.r * a.s;
}

Integer euler(const MukaiVector& a, const MukaiVector& b, const Surface& X) {
  return -pairing(a, b, X);
}

bool is_root(const MukaiVector& a, const Surface& X) {
  return a.c * a.c * X.p() - a.r * a.s == -1;
}

std::strong_ordering Slope::operator<=>(const Slope& o) const {
  if (infinite || o.infinite) {
    if (infinite && o.infinite) return std::strong_ordering::equal;
    return infinite ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(value, o.value);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Slope slope(const MukaiVector& a) {
  if (sgn(a.r) == 0) return Slope{true, Rational(0)};
  return Slope{false, make_rational(a.c, a.r)};
}

std::int64_t min_nondivisor(std::int64_t p) {
  std::int64_t k = 1;
  while ((p + 1) % k == 0) ++k;
  return k;
}

DistinguishedVectors distinguished_vectors(const Surface& X) {
  const long p = X.p();
  const long m = min_nondivisor(p);
  DistinguishedVectors d;
  d.m = m;
  d.v = MukaiVector(m * m, m, p);
  d.u = MukaiVector(-m * m, m * m - m, -p * (m - 1) * (m - 1));
  d.w = MukaiVector(0, m * m, 2 * p * m - m * m * p);
  return d;
}

MBoundCheck m_bound_check(std::int64_t p) {
  MBoundCheck r{};
  r.m = min_nondivisor(p);
  /* m < (p-1)/2 - 1  <=>  2m < p - 3 */
  r.m_inequality = 2 * r.m < p - 3;
  /* m <= floor(sqrt(2p/5)) <=> m^2 <= 2p/5 <=> 5 m^2 <= 2p */
  r.asymptotic = 5 * r.m * r.m <= 2 * p;
  std::int64_t k = 0;
  while (5 * (k + 1) * (k + 1) <= 2 * p) ++k;
  r.sqrt_bound = k;
  r.asymptotic_claimed = p > 250;
  return r;
}

}  // namespace k3wall
