#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chainmetric/metric.hpp"
#include "chainmetric/weight.hpp"

namespace chainmetric {

// Radii between consecutive values of the weight image describe the same
// balls, so every radius is normalized to S + R * max_weight with S a weight
// value (or 0) below max_weight.
struct RadiusDecomposition {
  std::uint64_t requested = 0;
  std::uint64_t normalized = 0;
  std::uint64_t S = 0;  // in Im(w) or 0, strictly below max_weight
  std::uint64_t R = 0;
};
RadiusDecomposition normalize_radius(const WeightTable& w, std::uint64_t r);

struct BallSizeResult {
  std::uint64_t size = 0;
  RadiusDecomposition radius;
  bool whole_space = false;  // the ball is all of F_q^n
  bool clamped = false;      // radius exceeded the largest vector weight
};
// Closed-form size of a chain ball of radius D: q^R when S = 0, otherwise
// q^R * (1 + #{a : 1 <= w(a) <= S}).
BallSizeResult ball_size(const WeightTable& w, unsigned n, std::uint64_t D);

// Members of the radius-D ball around center, sorted by rank. Uses the chain
// fast path on chains and the general evaluator elsewhere.
std::vector<Vector> ball(const MetricSpace& space, const Vector& center, std::uint64_t D,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// Largest pairwise distance; DomainError on an empty set.
std::uint64_t diameter(const MetricSpace& space, const std::vector<Vector>& A);

struct ProductBoundCheck {
  bool disjoint = false;     // nonzero distance sets of A and B do not meet
  bool bound_holds = false;  // |A| * |B| <= q^n (only meaningful when disjoint)
  std::uint64_t product = 0;
  std::uint64_t space_size = 0;
};
// Translation argument: when the nonzero distance sets are disjoint, the sums
// a + b are pairwise distinct, so |A| * |B| <= q^n.
ProductBoundCheck distance_set_product_bound(const MetricSpace& space,
                                             const std::vector<Vector>& A,
                                             const std::vector<Vector>& B);

// The two extremal families of field subsets behind anticode classification
// and diameter-perfect criteria. Members are sorted; the family lists are in
// lexicographic order; every member of a family has the same (maximum) size.
//
// lower ("W_w(S)"): subsets of {a : threshold <= w(a) <= S} whose elements
// stay within difference-weight S of each other and of every element below
// the threshold. Defined for threshold <= S <= max_weight.
//
// upper ("W^w(S)"): subsets with all pairwise difference weights >= S, at
// least one exactly S. Defined for S in Im(w), min <= S <= max.
struct WFamilies {
  std::uint64_t S = 0;
  bool lower_defined = false;
  std::vector<std::vector<FieldElement>> lower;
  bool upper_defined = false;
  std::vector<std::vector<FieldElement>> upper;
};
WFamilies w_families(const WeightTable& w, std::uint64_t S);

enum class AnticodeBranch { below_threshold, at_or_above_threshold };

struct AnticodeSize {
  std::uint64_t a_star = 0;
  AnticodeBranch branch = AnticodeBranch::below_threshold;
  RadiusDecomposition radius;
  unsigned threshold = 0;  // the weight's archimedean threshold
  bool whole_space = false;
};
// Maximum size of a set of diameter <= D in a chain space:
//   S < threshold:  q^R * (1 + #{a : w(a) <= S, a != 0})   (a ball)
//   S >= threshold: q^R * (1 + #{a : w(a) < threshold} + |W_w(S)|)
AnticodeSize optimal_anticode_size(const WeightTable& w, unsigned n, std::uint64_t D);

// A maximum-size set of diameter <= D around the given center. For the upper
// branch K must be a member of the lower family at S (checked); when omitted
// the lexicographically first member is used.
std::vector<Vector> build_optimal_anticode(const WeightTable& w, unsigned n, const Vector& center,
                                           std::uint64_t D,
                                           const std::optional<std::vector<FieldElement>>& K = {});

enum class AnticodeForm { ball, translated_star, none };

struct AnticodeCheck {
  bool optimal = false;
  std::uint64_t diameter = 0;
  std::uint64_t a_star = 0;
  AnticodeForm form = AnticodeForm::none;
  std::optional<Vector> center;                  // witness for either form
  std::optional<std::vector<FieldElement>> K;    // witness for translated_star
};
// Checks diameter <= D and |A| = A*(D), then matches A against the two
// construction shapes (smallest-rank witness center).
AnticodeCheck is_optimal_anticode(const std::vector<Vector>& A, const WeightTable& w, unsigned n,
                                  std::uint64_t D);

}  // namespace chainmetric
