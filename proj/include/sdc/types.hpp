#pragma once

#include <cstdint>
#include <vector>

namespace sdc {

using ItemId = std::uint32_t;
using SetId = std::uint32_t;

// A query: sorted, duplicate-free item ids, all within the target
// system's ground set.
struct Query {
  std::vector<ItemId> items;

  bool empty() const { return items.empty(); }
  std::size_t size() const { return items.size(); }
};

// Builds a Query from arbitrary ids: sorts, removes duplicates, and
// bounds-checks against a ground set of size n.
Query make_query(std::vector<ItemId> items, std::uint64_t n);

// Answer to a coverage query: at most k distinct original set ids plus
// the coverage as measured on whatever structure the answerer used.
struct Solution {
  std::vector<SetId> set_ids;
  std::uint64_t sketch_coverage = 0;
};

inline bool operator==(const Solution& a, const Solution& b) {
  return a.set_ids == b.set_ids && a.sketch_coverage == b.sketch_coverage;
}

}  // namespace sdc
