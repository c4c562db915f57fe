/* SPDX-License-Identifier: Apache-2.0
 *
 * exactnum.cpp -- integer square roots, squarefree normalization and the
 * certified RadicalSum comparison.
 */
#include "k3wall/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace k3wall {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

Ordering ordering_of(int sign) {
  return sign < 0 ? Ordering::Less : (sign > 0 ? Ordering::Greater : Ordering::Equal);
}

Ordering reverse(Ordering o) { return ordering_of(-static_cast<int>(o)); }

/* ---- integer helpers -------------------------------------------------- */

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt: negative argument");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer floor_div(const Integer& n, const Integer& d) {
  if (sgn(d) == 0) throw std::domain_error("floor_div: division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& n, const Integer& d) {
  if (sgn(d) == 0) throw std::domain_error("ceil_div: division by zero");
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Integer floor_of(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }
Integer ceil_of(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

Integer floor_avg_sqrt(const Integer& A, const Integer& D) {
  if (sgn(D) < 0) throw std::domain_error("floor_avg_sqrt: negative discriminant");
  /* With s = isqrt(D): if D is a square the value is (A+s)/2.  Otherwise
   * sqrt(D) lies strictly in (s, s+1), so (A+sqrt D)/2 lies strictly between
   * (A+s)/2 and (A+s+1)/2; neither interval contains an integer in its
   * interior that floor((A+s)/2) misses.  Both cases give floor((A+s)/2). */
  return floor_div(A + isqrt(D), 2);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

namespace {

/* Odd-only sieve of Eratosthenes up to `limit` (inclusive). */
std::vector<std::uint32_t> sieve(std::uint32_t limit) {
  std::vector<bool> composite(limit / 2 + 1, false);
  std::vector<std::uint32_t> primes{2};
  for (std::uint64_t i = 3; i <= limit; i += 2) {
    if (composite[i / 2]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j / 2] = true;
  }
  return primes;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = sieve(1u << 20);
  return primes;
}

const std::vector<std::uint32_t>& large_primes() {
  static const std::vector<std::uint32_t> primes = sieve(1u << 26);
  return primes;
}

/* Trial-divide `rem` by the primes of `table` starting at index `from`; the
 * loop stops once prime^3 > rem.  Returns true if it stopped for that reason,
 * false if the table ran out first. */
bool trial_divide(const std::vector<std::uint32_t>& table, std::size_t from, Integer& rem,
                  Integer& outside, Integer& squarefree) {
  for (std::size_t i = from; i < table.size(); ++i) {
    const unsigned long q = table[i];
    Integer cube = Integer(q) * q * q;
    if (cube > rem) return true;
    if (mpz_divisible_ui_p(rem.get_mpz_t(), q) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), q) != 0) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), q);
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) outside *= q;
    if (e % 2 == 1) squarefree *= q;
  }
  return false;
}

}  // namespace

SquarefreeSplit squarefree_split(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("squarefree_split: negative argument");
  if (sgn(n) == 0) return {Integer(0), Integer(0)};
  Integer rem = n, outside = 1, squarefree = 1;
  const auto& small = small_primes();
  bool done = trial_divide(small, 0, rem, outside, squarefree);
  if (!done) {
    const auto& large = large_primes();
    auto it = std::upper_bound(large.begin(), large.end(), small.back());
    done = trial_divide(large, static_cast<std::size_t>(it - large.begin()), rem, outside,
                        squarefree);
    if (!done) throw std::length_error("squarefree_split: radicand too large to factor");
  }
  /* rem has no prime factor below cbrt(rem): it is 1, p, p*q or p^2. */
  if (rem != 1) {
    if (is_perfect_square(rem)) {
      outside *= isqrt(rem);
    } else {
      squarefree *= rem;
    }
  }
  return {outside, squarefree};
}

std::string str(const Rational& q) { return q.get_str(); }
std::string str(const Integer& z) { return z.get_str(); }

/* ---- RadicalSum ------------------------------------------------------- */

RadicalSum RadicalSum::from_rational(const Rational& q) { return term(q, Integer(1)); }

RadicalSum RadicalSum::term(const Rational& coeff, const Integer& n) {
  return from_terms({Term{coeff, n}});
}

RadicalSum RadicalSum::sqrt_of(const Rational& q) {
  if (sgn(q) < 0) throw std::domain_error("RadicalSum::sqrt_of: negative argument");
  /* sqrt(a/b) = sqrt(a*b)/b */
  Integer ab = q.get_num() * q.get_den();
  return term(Rational(Integer(1), q.get_den()), ab);
}

RadicalSum RadicalSum::from_terms(std::vector<Term> raw) {
  RadicalSum r;
  r.terms_ = std::move(raw);
  r.normalize();
  return r;
}

void RadicalSum::normalize() {
  std::map<Integer, Rational> merged;
  for (auto& t : terms_) {
    if (sgn(t.radicand) < 0) throw std::domain_error("RadicalSum: negative radicand");
    if (sgn(t.coeff) == 0 || sgn(t.radicand) == 0) continue;
    SquarefreeSplit s = squarefree_split(t.radicand);
    Rational c = t.coeff * Rational(s.outside);
    c.canonicalize();
    auto [it, fresh] = merged.emplace(s.squarefree, c);
    if (!fresh) it->second += c;
  }
  terms_.clear();
  for (auto& [n, c] : merged) {
    if (sgn(c) != 0) terms_.push_back(Term{c, n});
  }
}

RadicalSum RadicalSum::normalized() const {
  RadicalSum r = *this;
  r.normalize();
  return r;
}

Rational RadicalSum::rational_part() const {
  for (const auto& t : terms_)
    if (t.radicand == 1) return t.coeff;
  return Rational(0);
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  /* Terms are already squarefree, so merging by radicand suffices. */
  std::map<Integer, Rational> merged;
  for (auto& t : all) {
    auto [it, fresh] = merged.emplace(t.radicand, t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  terms_.clear();
  for (auto& [n, c] : merged)
    if (sgn(c) != 0) terms_.push_back(Term{c, n});
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& o) { return *this += -o; }

RadicalSum& RadicalSum::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= q;
  return *this;
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void RadicalSum::enclose(unsigned bits, Integer& lo, Integer& hi) const {
  lo = 0;
  hi = 0;
  for (const auto& t : terms_) {
    Integer scaled = t.radicand << (2 * bits);
    Integer s = isqrt(scaled);
    Integer s_up = (s * s == scaled) ? s : s + 1; /* sqrt(n)*2^bits in [s, s_up] */
    const Integer& a = t.coeff.get_num();
    const Integer& b = t.coeff.get_den();
    if (sgn(a) > 0) {
      lo += floor_div(a * s, b);
      hi += ceil_div(a * s_up, b);
    } else {
      lo += floor_div(a * s_up, b);
      hi += ceil_div(a * s, b);
    }
  }
}

double RadicalSum::approx() const {
  double v = 0.0;
  for (const auto& t : terms_) v += t.coeff.get_d() * std::sqrt(t.radicand.get_d());
  return v;
}

std::string RadicalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    if (t.radicand == 1) {
      os << t.coeff.get_str();
    } else {
      os << t.coeff.get_str() << "*sqrt(" << t.radicand.get_str() << ")";
    }
  }
  return os.str();
}

namespace {

/* Exact sign for sums of at most two squarefree terms; 2 means "not decided". */
int small_exact_sign(const RadicalSum& y) {
  const auto& ts = y.terms();
  if (ts.empty()) return 0;
  if (ts.size() == 1) return sgn(ts[0].coeff);
  if (ts.size() == 2) {
    int s1 = sgn(ts[0].coeff), s2 = sgn(ts[1].coeff);
    if (s1 == s2) return s1;
    Rational m1 = ts[0].coeff * ts[0].coeff * Rational(ts[0].radicand);
    Rational m2 = ts[1].coeff * ts[1].coeff * Rational(ts[1].radicand);
    /* m1 == m2 is impossible for distinct squarefree radicands. */
    return m1 > m2 ? s1 : s2;
  }
  return 2;
}

}  // namespace

int radical_sign(const RadicalSum& y) {
  if (y.is_zero()) return 0; /* linear independence of square roots */
  unsigned bits = 64;
  for (int round = 0;; ++round) {
    Integer lo, hi;
    y.enclose(bits, lo, hi);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    if (round == 1) {
      int s = small_exact_sign(y);
      if (s != 2) return s;
    }
    bits *= 2;
  }
}

Ordering radical_cmp(const RadicalSum& x, const Rational& t) {
  return ordering_of(radical_sign(x - RadicalSum::from_rational(t)));
}

Ordering radical_cmp(const RadicalSum& x, const RadicalSum& y) {
  return ordering_of(radical_sign(x - y));
}

Integer radical_floor(const RadicalSum& x) {
  const unsigned bits = 64;
  Integer lo, hi;
  x.enclose(bits, lo, hi);
  Integer f_lo = lo >> bits; /* mpz shifts floor toward -infinity */
  Integer f_hi = hi >> bits;
  for (Integer k = f_hi; k >= f_lo; --k) {
    if (radical_cmp(x, Rational(k)) != Ordering::Less) return k;
  }
  return f_lo;
}

namespace {

std::string format_scaled(const Integer& v, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  bool neg = sgn(v) < 0;
  Integer a = abs(v);
  Integer ip = a / scale, fp = a % scale;
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (digits > 0) {
    std::string f = fp.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

Integer pow10(int digits) {
  Integer s = 1;
  for (int i = 0; i < digits; ++i) s *= 10;
  return s;
}

}  // namespace

std::string radical_decimal(const RadicalSum& x, int digits) {
  return format_scaled(radical_floor(x * Rational(pow10(digits))), digits);
}

std::string decimal_floor(const Rational& q, int digits) {
  return format_scaled(floor_of(q * Rational(pow10(digits))), digits);
}

std::string decimal_round_half_away(const Rational& q, int digits) {
  Rational v = q * Rational(pow10(digits));
  Integer r = floor_of(abs(v) + Rational(1, 2));
  if (sgn(v) < 0) r = -r;
  return format_scaled(r, digits);
}

}  // namespace k3wall
