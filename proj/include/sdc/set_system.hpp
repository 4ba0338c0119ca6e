#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdc/types.hpp"

namespace sdc {

// Immutable set system: ground set [0, n) and m sets, each a strictly
// increasing item-id list. n is explicit, never inferred from the ids,
// so isolated items are representable. Optional dictionaries map the
// dense indices back to the external string ids they were ingested from.
class SetSystem {
 public:
  // Validates: n >= 1, m >= 1, every list strictly increasing, every id
  // in [0, n). Throws ParamError / BoundsError.
  SetSystem(std::uint64_t n, std::vector<std::vector<ItemId>> sets);

  // Same, with external-id dictionaries (sizes must match m and n).
  SetSystem(std::uint64_t n, std::vector<std::vector<ItemId>> sets,
            std::vector<std::string> set_names,
            std::vector<std::string> item_names);

  std::uint64_t num_items() const { return n_; }
  std::uint64_t num_sets() const { return sets_.size(); }

  const std::vector<ItemId>& set_at(SetId s) const;
  const std::vector<std::vector<ItemId>>& sets() const { return sets_; }

  // Sum of list lengths.
  std::uint64_t edge_count() const { return edge_count_; }

  bool has_names() const { return !set_names_.empty(); }
  const std::vector<std::string>& set_names() const { return set_names_; }
  const std::vector<std::string>& item_names() const { return item_names_; }

  // Dictionary lookups; throw BoundsError when the external id is unknown.
  SetId set_index_of(const std::string& external) const;
  ItemId item_index_of(const std::string& external) const;

  bool operator==(const SetSystem& other) const {
    return n_ == other.n_ && sets_ == other.sets_;
  }

 private:
  void validate() const;

  std::uint64_t n_ = 0;
  std::vector<std::vector<ItemId>> sets_;
  std::uint64_t edge_count_ = 0;
  std::vector<std::string> set_names_;   // empty when no dictionary
  std::vector<std::string> item_names_;  // empty when no dictionary
};

// Reads the line-oriented edge-list format:
//   - "set_id<TAB>item_id" per non-empty, non-comment line (string tokens)
//   - lines starting with '#' are comments
//   - an optional header comment "#n=<int> m=<int>" pins the dimensions
// Dense indices are assigned in first-appearance order; duplicate edges
// collapse. Throws ParseError (with line number), DimensionError, or
// Error on empty input. Items contained in no set are permitted; a note
// per isolated-item situation is appended to *warnings when given.
SetSystem ingest_edge_list(std::istream& in,
                           std::vector<std::string>* warnings = nullptr);

// Writes the canonical edge-list form: header, then every edge sorted by
// (dense set id, dense item id) using the external ids when present and
// the decimal dense ids otherwise. ingest(emit(ingest(F))) is a fixed
// point of ingest∘emit.
void emit_edge_list(const SetSystem& sys, std::ostream& out);

// |(∪_{s in set_ids} sets[s]) ∩ q| without double counting.
// Throws BoundsError on an out-of-range set id.
std::uint64_t coverage(const std::vector<std::vector<ItemId>>& sets_by_index,
                       const std::vector<SetId>& set_ids, const Query& q);

}  // namespace sdc
