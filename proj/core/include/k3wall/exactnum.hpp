/* SPDX-License-Identifier: Apache-2.0
 *
 * exactnum.hpp -- exact arithmetic kernel for k3wall.
 *
 * Integers and rationals are GMP-backed (mpz_class / mpq_class).  On top of
 * them this header provides integer square roots, the floor of (A + sqrt D)/2,
 * and RadicalSum: an exact value  sum_i q_i * sqrt(n_i)  with rational q_i and
 * squarefree n_i, together with a certified comparison routine.
 *
 * Comparison strategy (radical_cmp):
 *   1. evaluate every term in dyadic interval arithmetic, starting at 64
 *      fractional bits and doubling per round, until the enclosure of x - t
 *      excludes zero;
 *   2. if the enclosure keeps straddling zero, decide exactly: the normalized
 *      difference is the empty sum iff it is zero (square roots of distinct
 *      squarefree integers are linearly independent over Q), and sums with at
 *      most two terms are decided by isolating and squaring.
 */
#ifndef K3WALL_EXACTNUM_HPP
#define K3WALL_EXACTNUM_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace k3wall {

using Integer = mpz_class;
using Rational = mpq_class;

/* Three-way result of an exact comparison. */
enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

const char* to_string(Ordering o);
Ordering ordering_of(int sign);
Ordering reverse(Ordering o);

/* ---- integer helpers -------------------------------------------------- */

/* Unique k >= 0 with k^2 <= n < (k+1)^2.  Throws std::domain_error for n < 0. */
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/* Floor division rounding toward -infinity; d != 0. */
Integer floor_div(const Integer& n, const Integer& d);
Integer ceil_div(const Integer& n, const Integer& d);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/* floor((A + sqrt(D)) / 2) with integer arithmetic only.  D >= 0. */
Integer floor_avg_sqrt(const Integer& A, const Integer& D);

Integer gcd(const Integer& a, const Integer& b);
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/* n = outside^2 * squarefree, squarefree > 0 (or both 0 when n == 0). */
struct SquarefreeSplit {
  Integer outside;
  Integer squarefree;
};
/* Exact factorization-based split.  Trial division runs up to the cube root
 * of the remaining cofactor; the final cofactor is then either 1, a prime, a
 * product of two distinct primes, or a prime square, which a perfect-square
 * test distinguishes.  Throws std::length_error if the cube root exceeds the
 * internal sieve limit (2^26), i.e. for radicands beyond about 3e23. */
SquarefreeSplit squarefree_split(const Integer& n);

/* Text form of a rational, e.g. "-3/13" or "22". */
std::string str(const Rational& q);
std::string str(const Integer& z);

/* ---- RadicalSum ------------------------------------------------------- */

class RadicalSum {
 public:
  struct Term {
    Rational coeff;
    Integer radicand; /* squarefree, >= 1; radicand 1 carries the rational part */
    bool operator==(const Term& o) const { return coeff == o.coeff && radicand == o.radicand; }
  };

  RadicalSum() = default;

  static RadicalSum from_rational(const Rational& q);
  /* coeff * sqrt(n), n >= 0 */
  static RadicalSum term(const Rational& coeff, const Integer& n);
  static RadicalSum sqrt_of(const Integer& n) { return term(Rational(1), n); }
  /* sqrt(q) for a nonnegative rational q, written as sqrt(num*den)/den. */
  static RadicalSum sqrt_of(const Rational& q);
  /* Build from arbitrary (possibly unnormalized) terms. */
  static RadicalSum from_terms(std::vector<Term> raw);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /* Rational part (coefficient of radicand 1). */
  Rational rational_part() const;

  RadicalSum& operator+=(const RadicalSum& o);
  RadicalSum& operator-=(const RadicalSum& o);
  RadicalSum& operator*=(const Rational& q);
  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(RadicalSum a, const Rational& q) { return a *= q; }
  friend RadicalSum operator*(const Rational& q, RadicalSum a) { return a *= q; }
  RadicalSum operator-() const;
  bool operator==(const RadicalSum& o) const { return terms_ == o.terms_; }

  /* Certified enclosure: lo <= 2^bits * x <= hi with lo, hi integers. */
  void enclose(unsigned bits, Integer& lo, Integer& hi) const;
  /* Floating approximation for display purposes only. */
  double approx() const;
  std::string to_string() const;

  /* Re-run normalization (idempotent; exposed for tests). */
  RadicalSum normalized() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/* Exact ordering of x against t. */
Ordering radical_cmp(const RadicalSum& x, const Rational& t);
/* Exact ordering of x against y (sign of x - y). */
Ordering radical_cmp(const RadicalSum& x, const RadicalSum& y);
/* Exact sign of x. */
int radical_sign(const RadicalSum& x);
/* floor(x), by interval bracketing plus exact comparison at the candidate. */
Integer radical_floor(const RadicalSum& x);
/* Decimal rendering truncated (toward -infinity) to the given digits. */
std::string radical_decimal(const RadicalSum& x, int digits);
/* Decimal rendering of a rational, truncated toward -infinity. */
std::string decimal_floor(const Rational& q, int digits);
/* Decimal rendering of a rational, rounded half away from zero. */
std::string decimal_round_half_away(const Rational& q, int digits);

}  // namespace k3wall

#endif  // K3WALL_EXACTNUM_HPP
