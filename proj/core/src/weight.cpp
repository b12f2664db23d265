#include "chainmetric/weight.hpp"

#include <algorithm>
#include <set>

#include "chainmetric/errors.hpp"

namespace chainmetric {

WeightTable::WeightTable(Field field, std::vector<unsigned> values)
    : field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != field_.q())
    throw ValidationError("weight table has " + std::to_string(values_.size()) +
                          " entries, field order is " + std::to_string(field_.q()));
}

WeightTable make_standard_weight(const Field& field, WeightKind kind) {
  std::vector<unsigned> values(field.q(), 0);
  switch (kind) {
    case WeightKind::hamming:
      for (unsigned a = 1; a < field.q(); ++a) values[a] = 1;
      break;
    case WeightKind::lee:
      if (field.k() != 1)
        throw DomainError("lee weight requires a prime field, got order " +
                          std::to_string(field.q()));
      for (unsigned a = 1; a < field.q(); ++a) values[a] = std::min(a, field.q() - a);
      break;
  }
  return WeightTable(field, std::move(values));
}

std::vector<WeightViolation> validate_weight(const WeightTable& w) {
  const Field& f = w.field();
  std::vector<WeightViolation> out;
  if (w.values()[0] != 0)
    out.push_back({WeightAxiom::zero_iff_zero, f.zero(), f.zero(),
                   "w(0) = " + std::to_string(w.values()[0]) + ", expected 0"});
  for (unsigned a = 1; a < f.q(); ++a)
    if (w.values()[a] == 0)
      out.push_back({WeightAxiom::zero_iff_zero, f.element(a), f.zero(),
                     "w(" + std::to_string(a) + ") = 0 on a nonzero element"});
  for (unsigned a = 1; a < f.q(); ++a) {
    FieldElement na = f.neg(f.element(a));
    if (na.index > a && w.values()[a] != w.values()[na.index])
      out.push_back({WeightAxiom::symmetry, f.element(a), na,
                     "w(" + std::to_string(a) + ") = " + std::to_string(w.values()[a]) +
                         " but w(-" + std::to_string(a) + ") = w(" + std::to_string(na.index) +
                         ") = " + std::to_string(w.values()[na.index])});
  }
  for (unsigned a = 0; a < f.q(); ++a)
    for (unsigned b = a; b < f.q(); ++b) {
      FieldElement s = f.add(f.element(a), f.element(b));
      if (w.values()[s.index] > w.values()[a] + w.values()[b])
        out.push_back({WeightAxiom::triangle, f.element(a), f.element(b),
                       "w(" + std::to_string(a) + "+" + std::to_string(b) + ") = " +
                           std::to_string(w.values()[s.index]) + " > " +
                           std::to_string(w.values()[a]) + " + " + std::to_string(w.values()[b])});
    }
  return out;
}

bool is_valid_weight(const WeightTable& w) { return validate_weight(w).empty(); }

void require_valid_weight(const WeightTable& w) {
  auto violations = validate_weight(w);
  if (violations.empty()) return;
  const char* axiom = nullptr;
  switch (violations.front().axiom) {
    case WeightAxiom::zero_iff_zero: axiom = "zero-iff-zero"; break;
    case WeightAxiom::symmetry: axiom = "symmetry"; break;
    case WeightAxiom::triangle: axiom = "triangle"; break;
  }
  throw ValidationError(std::string("invalid weight table (") + axiom +
                        " axiom): " + violations.front().detail);
}

WeightStats weight_stats(const WeightTable& w) {
  require_valid_weight(w);
  const Field& f = w.field();
  WeightStats stats;
  std::set<unsigned> image(w.values().begin(), w.values().end());
  stats.image.assign(image.begin(), image.end());
  stats.max_weight = stats.image.back();
  stats.min_nonzero_weight = *std::next(stats.image.begin());  // q >= 2, so a nonzero value exists
  stats.non_archimedean = true;
  stats.threshold = stats.max_weight;
  for (unsigned a = 0; a < f.q(); ++a)
    for (unsigned b = 0; b < f.q(); ++b) {
      unsigned hi = std::max(w.values()[a], w.values()[b]);
      FieldElement d = f.sub(f.element(a), f.element(b));
      if (w.values()[d.index] > hi) {
        stats.non_archimedean = false;
        stats.threshold = std::min(stats.threshold, hi);
      }
    }
  return stats;
}

WeightInterval weight_interval(const WeightTable& w, std::uint64_t r) {
  WeightInterval out;
  std::set<unsigned> values;
  for (unsigned a = 1; a < w.q(); ++a) {
    unsigned v = w.values()[a];
    if (v >= 1 && v <= r) {
      values.insert(v);
      ++out.preimage_count;
    }
  }
  out.values.assign(values.begin(), values.end());
  return out;
}

std::vector<std::uint64_t> realizable_radii(const WeightTable& w, unsigned n) {
  require_valid_weight(w);
  unsigned max_weight = *std::max_element(w.values().begin(), w.values().end());
  std::set<std::uint64_t> radii{0};
  for (unsigned a = 1; a < w.q(); ++a)
    for (unsigned i = 0; i < n; ++i)
      radii.insert(std::uint64_t(w.values()[a]) + std::uint64_t(i) * max_weight);
  return {radii.begin(), radii.end()};
}

std::uint64_t floor_weight(const WeightTable& w, unsigned n, std::uint64_t D) {
  require_valid_weight(w);
  if (D == 0) throw DomainError("no weight value lies strictly below 0");
  unsigned max_weight = *std::max_element(w.values().begin(), w.values().end());
  std::uint64_t best = 0;
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t base = std::uint64_t(i) * max_weight;
    if (base >= D) break;
    for (unsigned v : w.values()) {
      std::uint64_t candidate = base + v;
      if (candidate < D) best = std::max(best, candidate);
    }
  }
  return best;
}

WeightTable random_weight_table(const Field& field, unsigned max_value, std::mt19937& rng) {
  if (max_value == 0) throw ValidationError("weight values need an upper bound of at least 1");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<unsigned> values(field.q(), 0);
    for (unsigned a = 1; a < field.q(); ++a) {
      unsigned na = field.neg(field.element(a)).index;
      if (na < a) {
        values[a] = values[na];  // symmetry by construction
      } else {
        // Plain modulo keeps the draw identical across standard libraries.
        values[a] = 1 + static_cast<unsigned>(rng() % max_value);
      }
    }
    WeightTable w(field, std::move(values));
    if (is_valid_weight(w)) return w;
  }
  throw Error("random weight sampling failed to satisfy the triangle inequality");
}

}  // namespace chainmetric
