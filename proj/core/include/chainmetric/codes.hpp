#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chainmetric/anticode.hpp"
#include "chainmetric/field.hpp"
#include "chainmetric/weight.hpp"

// Block codes analyzed under a chain order. Structural quantities (minimum
// distances, packing radius, Singleton defect, diameter perfection) come in
// pairs: a closed form and an enumeration, cross-checked where cheap.

namespace chainmetric {

class Code {
 public:
  // Words are validated against the field, sorted by rank. Duplicates reject.
  Code(Field field, unsigned n, std::vector<Vector> words);

  const Field& field() const { return field_; }
  unsigned length() const { return n_; }
  const std::vector<Vector>& words() const { return words_; }
  std::uint64_t size() const { return words_.size(); }

 private:
  Field field_;
  unsigned n_;
  std::vector<Vector> words_;
};

struct MinDistances {
  std::uint64_t order_distance = 0;     // min over pairs of the ideal size of the difference
  unsigned pair_weight = 0;             // min top-coordinate weight among pairs realizing it
  std::uint64_t weighted_distance = 0;  // pair_weight + (order_distance - 1) * max weight
};

// Needs at least two words. The closed form is checked internally against the
// direct pairwise minimum; a mismatch throws.
MinDistances min_distances(const WeightTable& w, const Code& C);

// max_weight * (order_distance - 1): balls of this radius around distinct
// words never meet.
std::uint64_t packing_radius_formula(const WeightTable& w, const Code& C);

struct PackingRadiusCheck {
  std::uint64_t formula_radius = 0;
  std::uint64_t enumerated_radius = 0;  // true packing radius by collision scan
  bool disjoint_at_radius = false;      // formula_radius <= enumerated_radius
  bool collision_just_above = false;    // balls of formula_radius + min weight meet somewhere
};

PackingRadiusCheck verify_packing_radius(const WeightTable& w, const Code& C,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

struct PerfectionCheck {
  std::uint64_t packing_radius = 0;
  std::uint64_t covering_radius = 0;
  bool perfect = false;  // covering_radius <= packing_radius
};

PerfectionCheck is_perfect(const WeightTable& w, const Code& C,
                           std::uint64_t budget = kDefaultEnumerationBudget);

struct SingletonCheck {
  std::uint64_t order_distance = 0;
  std::uint64_t bound = 0;  // q^(n - order_distance + 1)
  bool mds = false;         // size meets the bound
};

SingletonCheck singleton_check(const WeightTable& w, const Code& C);

// Zero prefix of length d-1, free tail: q^(n-d+1) words with order distance d.
Code construct_mds(const Field& field, unsigned n, unsigned d);

struct DiameterPerfection {
  std::uint64_t weighted_distance = 0;
  std::uint64_t floor_radius = 0;   // largest realizable value below it
  std::uint64_t anticode_size = 0;  // best anticode cardinality at floor_radius
  std::uint64_t product = 0;        // anticode_size * |C|
  std::uint64_t space_size = 0;
  bool bound_holds = false;      // product <= space_size
  bool diameter_perfect = false; // equality
};

DiameterPerfection is_diameter_perfect(const WeightTable& w, const Code& C);

struct ThresholdCriterion {
  std::uint64_t S = 0;
  bool above_threshold = false;        // which factor decomposition applies
  std::uint64_t anticode_factor = 0;   // per-coordinate anticode contribution
  std::uint64_t upper_family_size = 0; // per-coordinate code contribution
  std::uint64_t product = 0;
  std::uint64_t q = 0;
  bool holds = false;           // product <= q
  bool admits_perfect = false;  // product == q: a diameter-perfect code with this profile exists
};

// Decides, per weight value S strictly between the extremes, whether some
// diameter-perfect code has its distance profile anchored at S.
ThresholdCriterion threshold_criterion(const WeightTable& w, std::uint64_t S);

// Zero prefix of length R-1, coordinate R running over a maximum upper-family
// member at S, free tail. Weighted minimum distance S + (R-1) * max weight.
Code construct_threshold_code(const WeightTable& w, unsigned n, std::uint64_t S, unsigned R);

struct PowerOfQClassification {
  unsigned k = 0;  // |C| = q^k
  bool mds = false;
  bool diameter_perfect = false;  // the two verdicts must agree for such sizes
};

// Both verdicts computed independently. Rejects codes whose size is not a
// power of q.
PowerOfQClassification power_of_q_classification(const WeightTable& w, const Code& C);

struct CodeReport {
  std::uint64_t size = 0;
  MinDistances distances;
  SingletonCheck singleton;
  std::uint64_t formula_packing_radius = 0;
  DiameterPerfection diameter;
  // Enumeration-backed checks, absent when the space exceeds the budget.
  std::optional<PackingRadiusCheck> packing;
  std::optional<PerfectionCheck> perfection;
};

CodeReport analyze_code(const WeightTable& w, const Code& C,
                        std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace chainmetric
