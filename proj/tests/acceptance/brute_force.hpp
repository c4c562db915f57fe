/* SPDX-License-Identifier: Apache-2.0
 *
 * brute_force.hpp -- exhaustive enumeration of convex lattice chains, written
 * independently of the library's dynamic programme.  Only plain integer
 * arithmetic and MPFR are used; no library routine takes part in the
 * enumeration or the bounds.
 */
#ifndef K3WALL_TESTS_BRUTE_FORCE_HPP
#define K3WALL_TESTS_BRUTE_FORCE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace k3wall::brute {

using Pt = std::pair<std::int64_t, std::int64_t>; /* (a, b) = (r - s, c) */

struct Result {
  std::size_t chains = 0;             /* chains from o to z2 avoiding z1 */
  std::int64_t plain_max = 0;         /* max of floor((chi + length) / 2) */
  std::int64_t refined_max = 0;       /* max of (chi + sum t_e) / 2 */
  std::vector<std::vector<Pt>> long_chains; /* plain floor >= p + m^2, sorted */
  std::size_t undecided = 0;          /* floors too close to call at 256 bits */
};

/* Enumerate every chain o -> z2 through lattice points of the closed
 * triangle o z1 z2 other than z1 whose consecutive edges turn strictly
 * clockwise, for the surface of degree 2p with distinguished integer m. */
Result enumerate(std::int64_t p, std::int64_t m);

std::string to_string(const std::vector<Pt>& chain);

}  // namespace k3wall::brute

#endif  // K3WALL_TESTS_BRUTE_FORCE_HPP
