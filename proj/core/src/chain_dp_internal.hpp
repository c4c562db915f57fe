/* SPDX-License-Identifier: Apache-2.0
 *
 * chain_dp_internal.hpp -- deadline-aware entry points of the chain search,
 * shared by polysearch.cpp and chain_dp.cpp.
 */
#ifndef K3WALL_CHAIN_DP_INTERNAL_HPP
#define K3WALL_CHAIN_DP_INTERNAL_HPP

#include <chrono>
#include <optional>

#include "k3wall/polysearch.hpp"

namespace k3wall::detail {

using Clock = std::chrono::steady_clock;

/* Each returns nullopt when the deadline passes before completion. */
std::optional<PlainChainResult> max_plain_chain(const std::vector<GaussPoint>& allowed,
                                                const GaussPoint& target, const Surface& X,
                                                Clock::time_point deadline);
std::optional<RefinedChainResult> max_refined_chain(const std::vector<GaussPoint>& allowed,
                                                    const GaussPoint& target, const Surface& X,
                                                    Clock::time_point deadline);
/* nullopt on deadline; otherwise whether the enumeration was complete. */
std::optional<bool> enumerate_long_chains(const std::vector<GaussPoint>& allowed, const GaussPoint& target,
                                          const Surface& X, const Integer& min_length, std::size_t cap,
                                          std::vector<Chain>& out, Clock::time_point deadline);

}  // namespace k3wall::detail

#endif  // K3WALL_CHAIN_DP_INTERNAL_HPP
