#pragma once

#include <cstdint>
#include <vector>

#include "sdc/types.hpp"

namespace sdc {

// Greedy max-k-cover: k rounds, each taking the set that covers the most
// still-uncovered query items (ties broken by lowest set index), stopping
// early once no set adds coverage. Runs in O(edges + k * edges_in_query).
Solution greedy_max_k_cover(const std::vector<std::vector<ItemId>>& sets_by_index,
                            const Query& q, std::uint32_t k);

// Exact optimum by enumerating every subset of at most k set indices in
// lexicographic order (so ties resolve to the lexicographically smallest
// id list). Guarded: C(m, min(k, m)) must be <= 10^7, else SizeError.
Solution exact_max_k_cover(const std::vector<std::vector<ItemId>>& sets_by_index,
                           const Query& q, std::uint32_t k);

}  // namespace sdc
