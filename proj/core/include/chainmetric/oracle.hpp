#pragma once

#include <cstdint>
#include <vector>

#include "chainmetric/field.hpp"
#include "chainmetric/metric.hpp"

// Independent reference computations. Everything here enumerates; nothing
// reuses the closed forms or the chain shortcut, so the two sides can be
// compared in tests. Sizes are deliberately small: these are correctness
// anchors, not production paths.

namespace chainmetric {

// Counts vectors v with distance(v, center) <= D by full enumeration through
// the general ideal/maximal-support route.
std::uint64_t brute_ball_size(const MetricSpace& space, const Vector& center, std::uint64_t D,
                              std::uint64_t budget = kDefaultEnumerationBudget);

// Largest cardinality of a set with pairwise distance <= D, by exact
// branch-and-bound maximum clique over the whole space. Throws BudgetError
// when q^n exceeds vertex_budget.
std::uint64_t brute_a_star(const MetricSpace& space, std::uint64_t D,
                           std::uint64_t vertex_budget = 125);

struct BruteAnticodeResult {
  std::uint64_t a_star = 0;
  // Every maximum-size set of pairwise distance <= D that contains the zero
  // vector, members sorted by rank, sets sorted lexicographically. By
  // translation invariance these represent all maximum sets up to translation.
  std::vector<std::vector<Vector>> maximum_sets;
};

BruteAnticodeResult brute_optimal_anticodes(const MetricSpace& space, std::uint64_t D,
                                            std::uint64_t vertex_budget = 125,
                                            std::uint64_t set_budget = 100000);

// Minimum weighted distance over distinct pairs of words.
std::uint64_t brute_min_weighted_distance(const MetricSpace& space,
                                          const std::vector<Vector>& words);

// Largest r such that the balls of radius r around the words are pairwise
// disjoint, found by enumerating collision points.
std::uint64_t brute_packing_radius(const MetricSpace& space, const std::vector<Vector>& words,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

// max over the space of the distance to the nearest word.
std::uint64_t brute_covering_radius(const MetricSpace& space, const std::vector<Vector>& words,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace chainmetric
