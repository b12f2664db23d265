#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "chainmetric/field.hpp"
#include "chainmetric/poset.hpp"
#include "chainmetric/weight.hpp"

namespace chainmetric {

// F_q^n with a poset on the coordinate labels and a weight on the field.
// The induced vector weight charges each maximal coordinate of the support
// ideal its own field weight and every other ideal coordinate the maximum
// field weight; the distance is the weight of the difference.
class MetricSpace {
 public:
  // Validates that the weight belongs to the same field, satisfies the weight
  // axioms, and that the poset size equals n.
  MetricSpace(Field field, unsigned n, Poset poset, WeightTable weight);

  const Field& field() const { return field_; }
  unsigned dimension() const { return n_; }
  const Poset& poset() const { return poset_; }
  const WeightTable& weight() const { return weight_; }
  unsigned max_weight() const { return max_weight_; }
  bool chain() const { return chain_; }

  // General evaluator, straight from the support-ideal decomposition. Works
  // on every poset.
  std::uint64_t wp_weight(const Vector& u) const;
  std::uint64_t wp_distance(const Vector& u, const Vector& v) const;

  // Chain fast path: w(u_i) + (rank(i) - 1) * max_weight for the top support
  // label i. ContractError when the poset is not a chain. Kept independent of
  // wp_weight so the two can be checked against each other.
  std::uint64_t chain_weight(const Vector& u) const;
  std::uint64_t chain_distance(const Vector& u, const Vector& v) const;

  // Deliberately wrong historical variant: charges every support coordinate
  // its own weight, max_weight only on the ideal remainder. Violates the
  // triangle inequality on chains whenever max_weight > 2 * min weight.
  std::uint64_t naive_support_weight(const Vector& u) const;

  Vector add(const Vector& u, const Vector& v) const;
  Vector subtract(const Vector& u, const Vector& v) const;

 private:
  void check_length(const Vector& u) const;
  Field field_;
  unsigned n_;
  Poset poset_;
  WeightTable weight_;
  unsigned max_weight_;
  bool chain_;
  std::vector<unsigned> chain_order_;  // labels by rank when chain_
};

struct UltrametricCheck {
  bool is_ultrametric = false;
  std::uint64_t triples_scanned = 0;
  // First triple (x, y, z) in rank order with d(x,y) > max{d(x,z), d(z,y)}.
  std::optional<std::array<Vector, 3>> witness;
};

// Exhaustive scan over all (q^n)^3 triples, early exit on the first
// violation; the witness is therefore the smallest in rank order. Works on
// every poset. BudgetError when the triple count exceeds the budget.
UltrametricCheck check_ultrametric(const MetricSpace& space,
                                   std::uint64_t triple_budget = 100'000'000);

}  // namespace chainmetric
