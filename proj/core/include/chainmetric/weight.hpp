#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chainmetric/field.hpp"

namespace chainmetric {

enum class WeightKind { hamming, lee };

// A weight table w : F_q -> N, stored by canonical element index. Construction
// only checks shape (length q); axiom checking is validate_weight's job, so
// invalid tables can be represented and reported on.
class WeightTable {
 public:
  WeightTable(Field field, std::vector<unsigned> values);

  const Field& field() const { return field_; }
  unsigned q() const { return field_.q(); }
  unsigned value(FieldElement a) const { return values_[a.index]; }
  unsigned operator()(FieldElement a) const { return values_[a.index]; }
  const std::vector<unsigned>& values() const { return values_; }

 private:
  Field field_;
  std::vector<unsigned> values_;
};

// Hamming: 1 on every nonzero element. Lee: min(a, p-a), prime fields only.
WeightTable make_standard_weight(const Field& field, WeightKind kind);

enum class WeightAxiom { zero_iff_zero, symmetry, triangle };

struct WeightViolation {
  WeightAxiom axiom;
  FieldElement a;
  FieldElement b;  // used by symmetry (b = -a) and triangle (the pair)
  std::string detail;
};

// All axiom violations: w(a) = 0 iff a = 0; w(a) = w(-a); w(a+b) <= w(a)+w(b).
std::vector<WeightViolation> validate_weight(const WeightTable& w);
bool is_valid_weight(const WeightTable& w);
// Throws ValidationError naming the first violated axiom.
void require_valid_weight(const WeightTable& w);

struct WeightStats {
  unsigned max_weight = 0;          // M_w
  unsigned min_nonzero_weight = 0;  // m_w
  std::vector<unsigned> image;      // sorted, includes 0
  // Smallest max{w(a), w(b)} over pairs with w(a-b) > max{w(a), w(b)};
  // equals max_weight when no such pair exists.
  unsigned threshold = 0;
  // True when w(a+b) <= max{w(a), w(b)} for all a, b.
  bool non_archimedean = false;
};
WeightStats weight_stats(const WeightTable& w);  // requires a valid table

struct WeightInterval {
  std::vector<unsigned> values;  // image values in [1, r], sorted
  unsigned preimage_count = 0;   // number of field elements with weight in values
};
WeightInterval weight_interval(const WeightTable& w, std::uint64_t r);

// Largest value of the chain weight image on F_q^n,
// {s + i*max_weight : s in Im(w), 0 <= i <= n-1} together with 0, that is
// strictly below D. DomainError when D = 0.
std::uint64_t floor_weight(const WeightTable& w, unsigned n, std::uint64_t D);

// All values the chain weight takes on F_q^n, sorted ascending (0 included).
std::vector<std::uint64_t> realizable_radii(const WeightTable& w, unsigned n);

// Deterministic valid table: symmetric values in 1..max_value, rejection
// sampled until the triangle inequality holds.
WeightTable random_weight_table(const Field& field, unsigned max_value, std::mt19937& rng);

}  // namespace chainmetric
