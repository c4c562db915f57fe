/* SPDX-License-Identifier: Apache-2.0
 *
 * property_suites.hpp -- randomized property checks shared by the property
 * test runner and the acceptance binary.  Every suite is seeded, so a run is
 * reproducible; a suite reports the number of cases and failures and the
 * first failing case.
 */
#ifndef K3WALL_TESTS_PROPERTY_SUITES_HPP
#define K3WALL_TESTS_PROPERTY_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace k3wall::props {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

/* ||g + h|| <= ||g|| + ||h|| for random Gaussian integers and primes p. */
SuiteResult norm_triangle_inequality(std::size_t cases, std::uint64_t seed);

/* For a random convex chain and a convex chain nested inside it with the same
 * endpoints (vertices removed or pulled toward their chord), the perimeter
 * does not increase. */
SuiteResult perimeter_monotonicity(std::size_t cases, std::uint64_t seed);

/* At a random rational stability point, two classes have equal phase iff
 * their projections are collinear with the kernel point. */
SuiteResult collinearity_phase_equality(std::size_t cases, std::uint64_t seed);

/* isqrt, floor_avg_sqrt and radical_cmp against 256-bit MPFR evaluation. */
SuiteResult isqrt_oracle(std::size_t cases, std::uint64_t seed);
SuiteResult floor_avg_sqrt_oracle(std::size_t cases, std::uint64_t seed);
SuiteResult radical_cmp_oracle(std::size_t cases, std::uint64_t seed);

}  // namespace k3wall::props

#endif  // K3WALL_TESTS_PROPERTY_SUITES_HPP
