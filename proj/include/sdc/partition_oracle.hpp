#pragma once

#include <cstdint>
#include <vector>

#include "sdc/set_system.hpp"
#include "sdc/types.hpp"

namespace sdc {

enum class PartitionKind : std::uint8_t { Simple, Greedy };

// Deterministic partition sketch: one part per original set index, parts
// pairwise disjoint, their union exactly the items that belong to at
// least one source set. Total edges <= n by construction.
struct PartitionSketch {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  PartitionKind kind = PartitionKind::Simple;
  std::vector<std::vector<ItemId>> parts;

  std::uint64_t edge_count() const;

  bool operator==(const PartitionSketch& o) const {
    return n == o.n && m == o.m && kind == o.kind && parts == o.parts;
  }
};

// First-owner partition: every item goes to the lowest-index set that
// contains it.
PartitionSketch build_simple_partition(const SetSystem& sys);

// Greedy partition: repeatedly pick the unchosen set with the most
// uncovered items (ties to the lowest index), give it its uncovered items
// as its part, until every set has been chosen.
PartitionSketch build_greedy_partition(const SetSystem& sys);

// Scores each part by |part ∩ q| and returns the k best set indices
// (ties to the lowest index). Parts are disjoint, so this is the exact
// optimum over the sketch. Parts scoring 0 are never returned.
Solution answer_partition(const PartitionSketch& sk, const Query& q,
                          std::uint32_t k);

}  // namespace sdc
