#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chainmetric/field.hpp"

namespace chainmetric {

// A partial order on the coordinate labels 1..n, stored as the full relation.
// Immutable once built. n is capped at 30 so down-sets fit in a machine word.
class Poset {
 public:
  static Poset chain(unsigned n);      // 1 <= 2 <= ... <= n
  static Poset antichain(unsigned n);  // only i <= i
  // Covers are 1-based (lower, upper) pairs; the transitive closure is taken
  // and cycles are rejected.
  static Poset from_covers(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& covers);

  unsigned size() const { return n_; }
  bool leq(unsigned i, unsigned j) const;  // i <=_P j, 1-based
  bool is_chain() const;

  // Mask of labels below-or-equal j (bit i-1 for label i).
  std::uint32_t down_set_mask(unsigned j) const;
  // Order ideal generated by the labels in X, sorted.
  std::vector<unsigned> ideal(const std::vector<unsigned>& X) const;
  // Minimal list of covers, sorted, suitable for serialization.
  std::vector<std::pair<unsigned, unsigned>> cover_relations() const;
  // Labels ordered by down-set size; for a chain this is the order of the
  // chain itself (position r holds the label of rank r+1).
  std::vector<unsigned> rank_order() const;

  bool operator==(const Poset& other) const { return n_ == other.n_ && below_ == other.below_; }

 private:
  Poset(unsigned n, std::vector<std::uint32_t> below) : n_(n), below_(std::move(below)) {}
  friend std::vector<Poset> enumerate_posets(unsigned n);
  unsigned n_ = 0;
  std::vector<std::uint32_t> below_;  // below_[j-1] = down-set mask of label j
};

// Support, its order ideal, and the maximal elements of that ideal, all as
// sorted 1-based label lists.
struct SupportIdeal {
  std::vector<unsigned> support;
  std::vector<unsigned> ideal;
  std::vector<unsigned> maximals;
};
SupportIdeal support_ideal(const Poset& poset, const Vector& u);

// Every partial order on labels 1..n (reflexive relations filtered for
// antisymmetry and transitivity). Exhaustive, for n <= 5.
std::vector<Poset> enumerate_posets(unsigned n);

}  // namespace chainmetric
