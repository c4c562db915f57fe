/* SPDX-License-Identifier: Apache-2.0
 *
 * mukai.hpp -- the Mukai lattice of a K3 surface X with Pic(X) = Z.H and
 * H^2 = 2p for a prime p >= 13.
 *
 * A Mukai vector is written (r, c, s) for (rank, c.H, s); the pairing is
 *   <(r,c,s), (r',c',s')> = 2p c c' - r s' - r' s,
 * the Euler characteristic is chi = r + s, and a root (spherical class) is a
 * vector with <d,d> = -2, i.e. p c^2 - r s = -1.
 */
#ifndef K3WALL_MUKAI_HPP
#define K3WALL_MUKAI_HPP

#include <cstdint>
#include <string>

#include "k3wall/exactnum.hpp"

namespace k3wall {

bool is_prime(std::int64_t n);

/* A polarized K3 surface of Picard rank one, encoded by the prime p. */
class Surface {
 public:
  /* Throws std::invalid_argument unless p is a prime >= 13. */
  explicit Surface(std::int64_t p);
  /* Construction from the genus g = p + 1. */
  static Surface from_genus(std::int64_t g);

  std::int64_t p() const { return p_; }
  std::int64_t h_sq() const { return 2 * p_; }
  std::int64_t genus() const { return p_ + 1; }

 private:
  std::int64_t p_;
};

struct MukaiVector {
  Integer r, c, s;
  MukaiVector() = default;
  MukaiVector(Integer r_, Integer c_, Integer s_) : r(std::move(r_)), c(std::move(c_)), s(std::move(s_)) {}
  MukaiVector(long r_, long c_, long s_) : r(r_), c(c_), s(s_) {}

  bool is_zero() const { return sgn(r) == 0 && sgn(c) == 0 && sgn(s) == 0; }
  Integer chi() const { return r + s; }
  bool operator==(const MukaiVector& o) const { return r == o.r && c == o.c && s == o.s; }
  MukaiVector operator+(const MukaiVector& o) const { return {r + o.r, c + o.c, s + o.s}; }
  MukaiVector operator-(const MukaiVector& o) const { return {r - o.r, c - o.c, s - o.s}; }
  MukaiVector operator-() const { return {-r, -c, -s}; }
  MukaiVector scaled(const Integer& k) const { return {r * k, c * k, s * k}; }
  /* gcd of the three entries (0 for the zero vector). */
  Integer content() const;
  bool is_primitive() const { return content() == 1; }
  std::string to_string() const;
};

Integer pairing(const MukaiVector& a, const MukaiVector& b, const Surface& X);
/* Euler form chi(a, b) = -<a, b>. */
Integer euler(const MukaiVector& a, const MukaiVector& b, const Surface& X);
bool is_root(const MukaiVector& a, const Surface& X);

/* Slope c/r, with +infinity for rank zero.  Ordered totally. */
struct Slope {
  bool infinite = false;
  Rational value;
  std::strong_ordering operator<=>(const Slope& o) const;
  bool operator==(const Slope& o) const { return (*this <=> o) == std::strong_ordering::equal; }
};
Slope slope(const MukaiVector& a);

/* Smallest positive integer that does not divide p + 1. */
std::int64_t min_nondivisor(std::int64_t p);

struct DistinguishedVectors {
  std::int64_t m;
  MukaiVector v; /* (m^2, m, p)                       */
  MukaiVector u; /* (-m^2, m^2 - m, -p (m-1)^2)       */
  MukaiVector w; /* (0, m^2, 2pm - m^2 p) = v + u      */
};
DistinguishedVectors distinguished_vectors(const Surface& X);

struct MBoundCheck {
  std::int64_t m;
  bool m_inequality;        /* m < (p-1)/2 - 1                         */
  bool asymptotic;           /* m^2 <= 2p/5, i.e. m <= floor(sqrt(2p/5)) */
  std::int64_t sqrt_bound;   /* floor(sqrt(2p/5))                        */
  bool asymptotic_claimed;   /* the asymptotic bound is asserted only for p > 250 */
};
MBoundCheck m_bound_check(std::int64_t p);

}  // namespace k3wall

#endif  // K3WALL_MUKAI_HPP
