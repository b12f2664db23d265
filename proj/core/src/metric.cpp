#include "chainmetric/metric.hpp"

#include <algorithm>
#include <string>

#include "chainmetric/errors.hpp"

namespace chainmetric {

MetricSpace::MetricSpace(Field field, unsigned n, Poset poset, WeightTable weight)
    : field_(std::move(field)), n_(n), poset_(std::move(poset)), weight_(std::move(weight)) {
  if (n_ == 0) throw ValidationError("dimension must be at least 1");
  if (poset_.size() != n_)
    throw ValidationError("poset size " + std::to_string(poset_.size()) +
                          " does not match dimension " + std::to_string(n_));
  if (!(weight_.field() == field_))
    throw ValidationError("weight table belongs to a different field");
  require_valid_weight(weight_);
  max_weight_ = *std::max_element(weight_.values().begin(), weight_.values().end());
  chain_ = poset_.is_chain();
  if (chain_) chain_order_ = poset_.rank_order();
}

void MetricSpace::check_length(const Vector& u) const {
  if (u.size() != n_)
    throw ValidationError("vector length " + std::to_string(u.size()) +
                          " does not match dimension " + std::to_string(n_));
}

std::uint64_t MetricSpace::wp_weight(const Vector& u) const {
  check_length(u);
  SupportIdeal si = support_ideal(poset_, u);
  std::uint64_t total = 0;
  for (unsigned j : si.maximals) total += weight_.values()[u[j - 1].index];
  total += std::uint64_t(max_weight_) * (si.ideal.size() - si.maximals.size());
  return total;
}

std::uint64_t MetricSpace::wp_distance(const Vector& u, const Vector& v) const {
  return wp_weight(subtract(u, v));
}

std::uint64_t MetricSpace::chain_weight(const Vector& u) const {
  if (!chain_) throw ContractError("chain weight evaluated on a poset that is not a chain");
  check_length(u);
  for (unsigned r = n_; r-- > 0;) {
    unsigned label = chain_order_[r];
    if (u[label - 1].index != 0)
      return std::uint64_t(weight_.values()[u[label - 1].index]) + std::uint64_t(r) * max_weight_;
  }
  return 0;
}

std::uint64_t MetricSpace::chain_distance(const Vector& u, const Vector& v) const {
  return chain_weight(subtract(u, v));
}

std::uint64_t MetricSpace::naive_support_weight(const Vector& u) const {
  check_length(u);
  SupportIdeal si = support_ideal(poset_, u);
  std::uint64_t total = 0;
  for (unsigned j : si.support) total += weight_.values()[u[j - 1].index];
  total += std::uint64_t(max_weight_) * (si.ideal.size() - si.support.size());
  return total;
}

Vector MetricSpace::add(const Vector& u, const Vector& v) const {
  check_length(u);
  check_length(v);
  Vector out(n_);
  for (unsigned i = 0; i < n_; ++i) out[i] = field_.add(u[i], v[i]);
  return out;
}

Vector MetricSpace::subtract(const Vector& u, const Vector& v) const {
  check_length(u);
  check_length(v);
  Vector out(n_);
  for (unsigned i = 0; i < n_; ++i) out[i] = field_.sub(u[i], v[i]);
  return out;
}

UltrametricCheck check_ultrametric(const MetricSpace& space, std::uint64_t triple_budget) {
  const Field& f = space.field();
  unsigned n = space.dimension();
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) size *= f.q();
  if (size > 2'000'000 || size * size * size > triple_budget)
    throw BudgetError("ultrametric scan needs " + std::to_string(size) + "^3 triples, budget is " +
                      std::to_string(triple_budget));

  // Distance table once, then a flat triple loop.
  std::vector<std::uint32_t> wt(size);
  for (std::uint64_t r = 0; r < size; ++r)
    wt[r] = static_cast<std::uint32_t>(space.wp_weight(vector_from_rank(f, n, r)));
  std::vector<std::uint32_t> diff(size * size);
  for (std::uint64_t a = 0; a < size; ++a) {
    Vector va = vector_from_rank(f, n, a);
    for (std::uint64_t b = 0; b < size; ++b) {
      Vector vb = vector_from_rank(f, n, b);
      diff[a * size + b] = static_cast<std::uint32_t>(wt[vector_rank(f, space.subtract(va, vb))]);
    }
  }

  UltrametricCheck out;
  for (std::uint64_t x = 0; x < size; ++x)
    for (std::uint64_t y = 0; y < size; ++y) {
      std::uint32_t dxy = diff[x * size + y];
      for (std::uint64_t z = 0; z < size; ++z) {
        ++out.triples_scanned;
        if (dxy > std::max(diff[x * size + z], diff[z * size + y])) {
          out.is_ultrametric = false;
          out.witness = {vector_from_rank(f, n, x), vector_from_rank(f, n, y),
                         vector_from_rank(f, n, z)};
          return out;
        }
      }
    }
  out.is_ultrametric = true;
  return out;
}

}  // namespace chainmetric
