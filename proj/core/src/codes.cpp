#include "chainmetric/codes.hpp"

#include <algorithm>
#include <string>

#include "chainmetric/errors.hpp"
#include "chainmetric/metric.hpp"
#include "chainmetric/oracle.hpp"
#include "chainmetric/poset.hpp"

namespace chainmetric {
namespace {

MetricSpace chain_space(const WeightTable& w, unsigned n) {
  return MetricSpace(w.field(), n, Poset::chain(n), w);
}

void require_same_field(const WeightTable& w, const Code& C) {
  if (!(w.field() == C.field())) throw ValidationError("weight and code use different fields");
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  while (exp--) out *= base;
  return out;
}

unsigned top_index(const Vector& v) {  // 1-based; 0 for the zero vector
  for (unsigned i = static_cast<unsigned>(v.size()); i-- > 0;)
    if (v[i].index != 0) return i + 1;
  return 0;
}

}  // namespace

Code::Code(Field field, unsigned n, std::vector<Vector> words)
    : field_(std::move(field)), n_(n), words_(std::move(words)) {
  if (words_.empty()) throw ValidationError("a code needs at least one word");
  for (const Vector& v : words_) {
    if (v.size() != n_) throw ValidationError("word length does not match code length");
    for (FieldElement e : v)
      if (e.index >= field_.q()) throw ValidationError("word coordinate outside the field");
  }
  std::sort(words_.begin(), words_.end(), [&](const Vector& a, const Vector& b) {
    return vector_rank(field_, a) < vector_rank(field_, b);
  });
  for (std::size_t i = 1; i < words_.size(); ++i)
    if (words_[i] == words_[i - 1]) throw ValidationError("duplicate word in code");
}

MinDistances min_distances(const WeightTable& w, const Code& C) {
  require_same_field(w, C);
  if (C.size() < 2) throw DomainError("minimum distance needs at least two words");
  MetricSpace space = chain_space(w, C.length());
  std::uint64_t M = space.max_weight();
  MinDistances out;
  out.order_distance = UINT64_MAX;
  std::uint64_t direct = UINT64_MAX;
  for (std::size_t i = 0; i < C.size(); ++i)
    for (std::size_t j = i + 1; j < C.size(); ++j) {
      Vector d = space.subtract(C.words()[i], C.words()[j]);
      unsigned top = top_index(d);
      unsigned s = w.values()[d[top - 1].index];
      direct = std::min<std::uint64_t>(direct, s + std::uint64_t(top - 1) * M);
      if (top < out.order_distance) {
        out.order_distance = top;
        out.pair_weight = s;
      } else if (top == out.order_distance) {
        out.pair_weight = std::min(out.pair_weight, s);
      }
    }
  out.weighted_distance = out.pair_weight + (out.order_distance - 1) * M;
  if (out.weighted_distance != direct)
    throw Error("structured minimum distance disagrees with the pairwise minimum");
  return out;
}

std::uint64_t packing_radius_formula(const WeightTable& w, const Code& C) {
  MinDistances d = min_distances(w, C);
  return weight_stats(w).max_weight * (d.order_distance - 1);
}

PackingRadiusCheck verify_packing_radius(const WeightTable& w, const Code& C,
                                         std::uint64_t budget) {
  require_same_field(w, C);
  MetricSpace space = chain_space(w, C.length());
  PackingRadiusCheck out;
  out.formula_radius = packing_radius_formula(w, C);
  out.enumerated_radius = brute_packing_radius(space, C.words(), budget);
  out.disjoint_at_radius = out.formula_radius <= out.enumerated_radius;
  std::uint64_t just_above = out.formula_radius + weight_stats(w).min_nonzero_weight;
  out.collision_just_above = just_above > out.enumerated_radius;
  return out;
}

PerfectionCheck is_perfect(const WeightTable& w, const Code& C, std::uint64_t budget) {
  require_same_field(w, C);
  if (C.size() < 2) throw DomainError("perfection check needs at least two words");
  MetricSpace space = chain_space(w, C.length());
  PerfectionCheck out;
  out.packing_radius = brute_packing_radius(space, C.words(), budget);
  out.covering_radius = brute_covering_radius(space, C.words(), budget);
  out.perfect = out.covering_radius <= out.packing_radius;
  // Disjoint balls cover iff the counts add up; both views must agree.
  std::uint64_t ball = brute_ball_size(space, C.words().front(), out.packing_radius, budget);
  bool counts = ball * C.size() == pow_u64(w.q(), C.length());
  if (counts != out.perfect) throw Error("perfection count check disagrees with radii");
  return out;
}

SingletonCheck singleton_check(const WeightTable& w, const Code& C) {
  MinDistances d = min_distances(w, C);
  SingletonCheck out;
  out.order_distance = d.order_distance;
  out.bound = pow_u64(w.q(), C.length() - static_cast<unsigned>(d.order_distance) + 1);
  if (C.size() > out.bound) throw Error("code exceeds the Singleton bound");
  out.mds = C.size() == out.bound;
  return out;
}

Code construct_mds(const Field& field, unsigned n, unsigned d) {
  if (d < 1 || d > n) throw ValidationError("order distance must lie in [1, n]");
  unsigned free = n - d + 1;
  std::uint64_t count = pow_u64(field.q(), free);
  std::vector<Vector> words;
  words.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    Vector tail = vector_from_rank(field, free, r);
    Vector word(n, field.zero());
    for (unsigned i = 0; i < free; ++i) word[d - 1 + i] = tail[i];
    words.push_back(std::move(word));
  }
  Code C(field, n, std::move(words));
  if (C.size() >= 2) {
    WeightTable h = make_standard_weight(field, WeightKind::hamming);
    MinDistances check = min_distances(h, C);
    if (check.order_distance != d || C.size() != pow_u64(field.q(), free))
      throw Error("constructed code misses its order distance");
  }
  return C;
}

DiameterPerfection is_diameter_perfect(const WeightTable& w, const Code& C) {
  MinDistances d = min_distances(w, C);
  DiameterPerfection out;
  out.weighted_distance = d.weighted_distance;
  out.floor_radius = floor_weight(w, C.length(), d.weighted_distance);
  out.anticode_size = optimal_anticode_size(w, C.length(), out.floor_radius).a_star;
  out.product = out.anticode_size * C.size();
  out.space_size = pow_u64(w.q(), C.length());
  out.bound_holds = out.product <= out.space_size;
  out.diameter_perfect = out.product == out.space_size;
  return out;
}

ThresholdCriterion threshold_criterion(const WeightTable& w, std::uint64_t S) {
  WeightStats stats = weight_stats(w);
  if (S <= stats.min_nonzero_weight || S >= stats.max_weight)
    throw DomainError("criterion applies strictly between the extreme weight values");
  if (!std::binary_search(stats.image.begin(), stats.image.end(), S))
    throw DomainError("S = " + std::to_string(S) + " is not a weight value");
  ThresholdCriterion out;
  out.S = S;
  out.q = w.q();
  out.above_threshold = S > stats.threshold;
  if (out.above_threshold) {
    out.anticode_factor = 1 + weight_interval(w, stats.threshold - 1).preimage_count;
    WFamilies lower = w_families(w, S - 1);
    out.anticode_factor += lower.lower.empty() ? 0 : lower.lower.front().size();
  } else {
    out.anticode_factor = 1 + weight_interval(w, S - 1).preimage_count;
  }
  WFamilies fam = w_families(w, S);
  out.upper_family_size = fam.upper.empty() ? 0 : fam.upper.front().size();
  out.product = out.anticode_factor * out.upper_family_size;
  out.holds = out.product <= out.q;
  out.admits_perfect = out.product == out.q;
  return out;
}

Code construct_threshold_code(const WeightTable& w, unsigned n, std::uint64_t S, unsigned R) {
  if (R < 1 || R > n) throw ValidationError("anchor coordinate must lie in [1, n]");
  WFamilies fam = w_families(w, S);
  if (!fam.upper_defined || fam.upper.empty())
    throw DomainError("no upper family exists at S = " + std::to_string(S));
  const std::vector<FieldElement>& member = fam.upper.front();
  const Field& f = w.field();
  unsigned free = n - R;
  std::uint64_t tails = pow_u64(f.q(), free);
  std::vector<Vector> words;
  words.reserve(member.size() * tails);
  for (FieldElement a : member)
    for (std::uint64_t r = 0; r < tails; ++r) {
      Vector tail = vector_from_rank(f, free, r);
      Vector word(n, f.zero());
      word[R - 1] = a;
      for (unsigned i = 0; i < free; ++i) word[R + i] = tail[i];
      words.push_back(std::move(word));
    }
  Code C(f, n, std::move(words));
  if (C.size() >= 2) {
    MinDistances check = min_distances(w, C);
    std::uint64_t expected = S + std::uint64_t(R - 1) * weight_stats(w).max_weight;
    if (check.weighted_distance != expected)
      throw Error("constructed code misses its weighted distance");
  }
  return C;
}

PowerOfQClassification power_of_q_classification(const WeightTable& w, const Code& C) {
  PowerOfQClassification out;
  std::uint64_t size = C.size();
  std::uint64_t acc = 1;
  while (acc < size) {
    acc *= w.q();
    ++out.k;
  }
  if (acc != size) throw DomainError("code size is not a power of the field order");
  out.mds = singleton_check(w, C).mds;
  out.diameter_perfect = is_diameter_perfect(w, C).diameter_perfect;
  return out;
}

CodeReport analyze_code(const WeightTable& w, const Code& C, std::uint64_t budget) {
  CodeReport out;
  out.size = C.size();
  out.distances = min_distances(w, C);
  out.singleton = singleton_check(w, C);
  out.diameter = is_diameter_perfect(w, C);
  out.formula_packing_radius = packing_radius_formula(w, C);
  std::uint64_t space = pow_u64(w.q(), C.length());
  if (space <= budget && space * C.size() <= budget) {
    out.packing = verify_packing_radius(w, C, budget);
    out.perfection = is_perfect(w, C, budget);
  }
  return out;
}

}  // namespace chainmetric
