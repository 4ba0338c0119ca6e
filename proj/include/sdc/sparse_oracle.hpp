#pragma once

#include <cstdint>
#include <vector>

#include "sdc/set_system.hpp"
#include "sdc/types.hpp"

namespace sdc {

// Randomized sparsification sketch, tuned for a build-time k and a space
// parameter epsilon in [0, 1/2].
//
// Stage 1 peels "significant" sets: while some unchosen set still holds
// at least n / (m^eps * sqrt(k)) uncovered items (lowest index first),
// its uncovered items become its part and are marked covered. Stage-1
// parts are therefore pairwise disjoint.
//
// Stage 2 keeps, for every remaining set, an independent uniform sample
// of min(ceil(n / m^(2*eps)), u) of its u Stage-1-uncovered items, drawn
// from a stream keyed by (seed, set index). Stage-2 sampling does not
// deplete other sets' pools, so two insignificant parts may overlap.
struct SparseSketch {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double epsilon = 0.0;
  std::uint64_t k_build = 1;
  std::uint64_t seed = 0;
  double stage1_threshold = 0.0;    // n / (m^eps * sqrt(k)), real-valued
  std::uint64_t stage2_sample = 0;  // ceil(n / m^(2*eps))
  std::vector<std::vector<ItemId>> parts;
  std::vector<bool> significant;  // per set index

  std::uint64_t edge_count() const;

  bool operator==(const SparseSketch& o) const {
    return n == o.n && m == o.m && epsilon == o.epsilon &&
           k_build == o.k_build && seed == o.seed && parts == o.parts &&
           significant == o.significant;
  }
};

double sparse_stage1_threshold(std::uint64_t n, std::uint64_t m, double epsilon,
                               std::uint64_t k);
std::uint64_t sparse_stage2_sample(std::uint64_t n, std::uint64_t m,
                                   double epsilon);

// Throws ParamError unless 0 <= epsilon <= 1/2 and k >= 1. Identical
// (sys, epsilon, k, seed) produce identical sketches, bit for bit.
SparseSketch build_sparsified(const SetSystem& sys, double epsilon,
                              std::uint64_t k, std::uint64_t seed);

// Greedy max-k-cover over the stored parts; returned indices are the
// original set ids. k may differ from k_build (callers report the
// mismatch; the guarantee is for the build-time k).
Solution answer_sparsified(const SparseSketch& sk, const Query& q,
                           std::uint32_t k);

}  // namespace sdc
