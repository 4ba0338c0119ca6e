#pragma once

#include <cstdint>

#include "sdc/partition_oracle.hpp"
#include "sdc/sparse_oracle.hpp"

namespace sdc {

// Two-arm sketch: the randomized sparse sketch plus a greedy partition,
// both built from the same source system.
struct CombinedSketch {
  SparseSketch sparse;
  PartitionSketch partition;  // always PartitionKind::Greedy

  std::uint64_t edge_count() const {
    return sparse.edge_count() + partition.edge_count();
  }

  bool operator==(const CombinedSketch& o) const {
    return sparse == o.sparse && partition == o.partition;
  }
};

CombinedSketch build_combined(const SetSystem& sys, double epsilon,
                              std::uint64_t k, std::uint64_t seed);

// Answers with both arms and returns the solution with the larger
// sketch-measured coverage (tie -> sparse arm).
Solution answer_combined(const CombinedSketch& sk, const Query& q,
                         std::uint32_t k);

// Alternative rule for experiments: pick the arm statically, sparse when
// m^eps <= sqrt(n) and the partition otherwise, and only consult that arm.
Solution answer_combined_static(const CombinedSketch& sk, const Query& q,
                                std::uint32_t k);

}  // namespace sdc
