/* SPDX-License-Identifier: Apache-2.0
 *
 * Unit tests for Mukai vectors, the pairing and the distinguished classes.
 */
#include <gtest/gtest.h>

#include <stdexcept>
#include <utility>

#include "k3wall/mukai.hpp"

using namespace k3wall;

namespace {
const std::pair<long, long> kPairs[] = {{13, 3}, {17, 4}, {19, 3}, {23, 5}, {29, 4}, {47, 5}, {59, 7}};
}

TEST(Surface, RejectsBadInput) {
  EXPECT_THROW(Surface(12), std::invalid_argument);
  EXPECT_THROW(Surface(11), std::invalid_argument);
  EXPECT_NO_THROW(Surface(13));
  EXPECT_EQ(Surface::from_genus(14).p(), 13);
  EXPECT_EQ(Surface(13).h_sq(), 26);
}

TEST(Pairing, Examples) {
  for (long p : {13L, 17L, 23L}) EXPECT_EQ(pairing(MukaiVector(1, 0, 1), MukaiVector(1, 0, 1), Surface(p)), -2);
  EXPECT_EQ(pairing(MukaiVector(0, 1, 0), MukaiVector(0, 1, 0), Surface(13)), 26);
}

TEST(Pairing, EulerIsMinusPairing) {
  const Surface X(17);
  const MukaiVector a(3, 2, 5), b(-1, 4, 2);
  EXPECT_EQ(euler(a, b, X), -pairing(a, b, X));
}

TEST(Roots, Examples) {
  const Surface X(13);
  EXPECT_TRUE(is_root(MukaiVector(1, 0, 1), X));
  EXPECT_TRUE(is_root(MukaiVector(1, 1, 14), X));
  EXPECT_FALSE(is_root(MukaiVector(0, 1, 0), X));
}

TEST(MinNondivisor, PublishedPairs) {
  for (auto [p, m] : kPairs) EXPECT_EQ(min_nondivisor(p), m) << "p=" << p;
}

TEST(Distinguished, P13) {
  const auto d = distinguished_vectors(Surface(13));
  EXPECT_EQ(d.m, 3);
  EXPECT_EQ(d.v, MukaiVector(9, 3, 13));
  EXPECT_EQ(d.w, MukaiVector(0, 9, -39));
  EXPECT_EQ(d.v + d.u, d.w);
}

TEST(Distinguished, P23) {
  const auto d = distinguished_vectors(Surface(23));
  EXPECT_EQ(d.v, MukaiVector(25, 5, 23));
  EXPECT_EQ(d.u, MukaiVector(-25, 20, -368));
}

TEST(Distinguished, P17Euler) {
  const auto d = distinguished_vectors(Surface(17));
  EXPECT_EQ(d.w.chi(), -136);
}

TEST(Distinguished, IsotropicAndCoprime) {
  for (auto [p, m] : kPairs) {
    const Surface X(p);
    const auto d = distinguished_vectors(X);
    EXPECT_EQ(pairing(d.v, d.v, X), 0) << "p=" << p;
    EXPECT_EQ(gcd(Integer(m), Integer(p - m * m)), 1) << "p=" << p;
    EXPECT_TRUE(d.v.is_primitive());
  }
}

TEST(MBound, Examples) {
  EXPECT_TRUE(m_bound_check(13).m_inequality);
  const auto b251 = m_bound_check(251);
  EXPECT_EQ(b251.m, 5);
  EXPECT_EQ(b251.sqrt_bound, 10);
  EXPECT_TRUE(b251.asymptotic);
  EXPECT_TRUE(b251.asymptotic_claimed);
  const auto b17 = m_bound_check(17);
  EXPECT_EQ(b17.sqrt_bound, 2);
  EXPECT_FALSE(b17.asymptotic);
  EXPECT_FALSE(b17.asymptotic_claimed);
}

TEST(Slope, Ordering) {
  EXPECT_LT(slope(MukaiVector(1, 0, 1)), slope(MukaiVector(1, 1, 14)));
  EXPECT_TRUE(slope(MukaiVector(0, 1, 0)).infinite);
  EXPECT_LT(slope(MukaiVector(2, 5, 1)), slope(MukaiVector(0, 1, 0)));
}
