#include "chainmetric/poset.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "chainmetric/errors.hpp"

namespace chainmetric {
namespace {

constexpr unsigned kMaxLabels = 30;

void check_size(unsigned n) {
  if (n == 0) throw ValidationError("poset needs at least one coordinate");
  if (n > kMaxLabels)
    throw ValidationError("poset size " + std::to_string(n) + " above supported maximum " +
                          std::to_string(kMaxLabels));
}

}  // namespace

Poset Poset::chain(unsigned n) {
  check_size(n);
  std::vector<std::uint32_t> below(n);
  for (unsigned j = 1; j <= n; ++j) below[j - 1] = (j == 32 ? ~0u : (1u << j) - 1u);
  return Poset(n, std::move(below));
}

Poset Poset::antichain(unsigned n) {
  check_size(n);
  std::vector<std::uint32_t> below(n);
  for (unsigned j = 1; j <= n; ++j) below[j - 1] = 1u << (j - 1);
  return Poset(n, std::move(below));
}

Poset Poset::from_covers(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& covers) {
  check_size(n);
  std::vector<std::uint32_t> below(n);
  for (unsigned j = 1; j <= n; ++j) below[j - 1] = 1u << (j - 1);
  for (auto [lo, hi] : covers) {
    if (lo < 1 || lo > n || hi < 1 || hi > n)
      throw ValidationError("cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                            ") out of range 1.." + std::to_string(n));
    if (lo == hi)
      throw ValidationError("cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                            ") relates a label to itself");
    below[hi - 1] |= 1u << (lo - 1);
  }
  // Transitive closure; below_[j] accumulates everything under j.
  for (bool changed = true; changed;) {
    changed = false;
    for (unsigned j = 0; j < n; ++j) {
      std::uint32_t mask = below[j];
      std::uint32_t grown = mask;
      for (unsigned i = 0; i < n; ++i)
        if (mask & (1u << i)) grown |= below[i];
      if (grown != mask) {
        below[j] = grown;
        changed = true;
      }
    }
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      if ((below[j] & (1u << i)) && (below[i] & (1u << j)))
        throw ValidationError("cover list contains a cycle through labels " + std::to_string(i + 1) +
                              " and " + std::to_string(j + 1));
  return Poset(n, std::move(below));
}

bool Poset::leq(unsigned i, unsigned j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw ValidationError("label out of range 1.." + std::to_string(n_));
  return (below_[j - 1] >> (i - 1)) & 1u;
}

bool Poset::is_chain() const {
  for (unsigned i = 1; i <= n_; ++i)
    for (unsigned j = i + 1; j <= n_; ++j)
      if (!leq(i, j) && !leq(j, i)) return false;
  return true;
}

std::uint32_t Poset::down_set_mask(unsigned j) const {
  if (j < 1 || j > n_) throw ValidationError("label out of range 1.." + std::to_string(n_));
  return below_[j - 1];
}

std::vector<unsigned> Poset::ideal(const std::vector<unsigned>& X) const {
  std::uint32_t mask = 0;
  for (unsigned x : X) {
    if (x < 1 || x > n_) throw ValidationError("label out of range 1.." + std::to_string(n_));
    mask |= below_[x - 1];
  }
  std::vector<unsigned> out;
  for (unsigned j = 1; j <= n_; ++j)
    if (mask & (1u << (j - 1))) out.push_back(j);
  return out;
}

std::vector<std::pair<unsigned, unsigned>> Poset::cover_relations() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 1; i <= n_; ++i)
    for (unsigned j = 1; j <= n_; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covered = true;
      for (unsigned k = 1; covered && k <= n_; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

std::vector<unsigned> Poset::rank_order() const {
  std::vector<unsigned> labels(n_);
  for (unsigned j = 1; j <= n_; ++j) labels[j - 1] = j;
  std::stable_sort(labels.begin(), labels.end(), [&](unsigned a, unsigned b) {
    return std::popcount(below_[a - 1]) < std::popcount(below_[b - 1]);
  });
  return labels;
}

SupportIdeal support_ideal(const Poset& poset, const Vector& u) {
  if (u.size() != poset.size())
    throw ValidationError("vector length " + std::to_string(u.size()) + " does not match poset size " +
                          std::to_string(poset.size()));
  SupportIdeal out;
  std::uint32_t ideal_mask = 0;
  for (unsigned j = 1; j <= poset.size(); ++j)
    if (u[j - 1].index != 0) {
      out.support.push_back(j);
      ideal_mask |= poset.down_set_mask(j);
    }
  for (unsigned j = 1; j <= poset.size(); ++j) {
    if (!(ideal_mask & (1u << (j - 1)))) continue;
    out.ideal.push_back(j);
    std::uint32_t strictly_above = 0;
    for (unsigned k = 1; k <= poset.size(); ++k)
      if (k != j && poset.leq(j, k)) strictly_above |= 1u << (k - 1);
    if ((strictly_above & ideal_mask) == 0) out.maximals.push_back(j);
  }
  return out;
}

std::vector<Poset> enumerate_posets(unsigned n) {
  check_size(n);
  if (n > 5) throw BudgetError("poset enumeration supported for n <= 5, got " + std::to_string(n));
  // One bit per ordered pair (i, j), i != j, meaning i <_P j.
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<Poset> out;
  for (std::uint32_t bits = 0; bits < (1u << pairs.size()); ++bits) {
    bool rel[6][6] = {};
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (bits & (1u << t)) rel[pairs[t].first][pairs[t].second] = true;
    bool ok = true;
    for (unsigned i = 1; ok && i <= n; ++i)
      for (unsigned j = 1; ok && j <= n; ++j) {
        if (i != j && rel[i][j] && rel[j][i]) ok = false;  // antisymmetry
        for (unsigned k = 1; ok && k <= n; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) ok = false;  // transitivity
      }
    if (!ok) continue;
    std::vector<std::uint32_t> below(n);
    for (unsigned j = 1; j <= n; ++j) {
      below[j - 1] = 1u << (j - 1);
      for (unsigned i = 1; i <= n; ++i)
        if (rel[i][j]) below[j - 1] |= 1u << (i - 1);
    }
    out.push_back(Poset(n, std::move(below)));
  }
  return out;
}

}  // namespace chainmetric
