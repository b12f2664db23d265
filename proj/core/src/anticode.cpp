#include "chainmetric/anticode.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "chainmetric/errors.hpp"

namespace chainmetric {
namespace {

MetricSpace chain_space(const WeightTable& w, unsigned n) {
  return MetricSpace(w.field(), n, Poset::chain(n), w);
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  while (exp--) out *= base;
  return out;
}

std::vector<std::uint64_t> sorted_ranks(const Field& f, const std::vector<Vector>& A) {
  std::vector<std::uint64_t> ranks;
  ranks.reserve(A.size());
  for (const Vector& v : A) ranks.push_back(vector_rank(f, v));
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

// All maximum subsets of {0..count-1} that are cliques of `adj`; when
// need_tight is set, only subsets containing at least one `tight` pair count.
// Returns masks in lexicographic discovery order.
std::vector<std::uint64_t> all_max_subsets(unsigned count, const std::vector<std::uint64_t>& adj,
                                           const std::vector<std::uint64_t>& tight,
                                           bool need_tight) {
  if (count > 64) throw BudgetError("family search supports at most 64 candidates");
  unsigned best = 0;
  bool any = !need_tight;  // the empty set qualifies when no tight pair is required
  auto grow_best = [&](auto&& self, unsigned start, std::uint64_t clique, unsigned size,
                       bool has_tight) -> void {
    if ((has_tight || !need_tight) && (size > best || !any)) {
      if (!any || size > best) best = std::max(best, size);
      any = true;
    }
    for (unsigned i = start; i < count; ++i) {
      if (size + (count - i) < best + 1) break;  // cannot beat the incumbent
      if ((adj[i] & clique) != clique) continue;
      self(self, i + 1, clique | (1ull << i), size + 1,
           has_tight || (tight.empty() ? false : (tight[i] & clique) != 0));
    }
  };
  grow_best(grow_best, 0, 0, 0, false);

  std::vector<std::uint64_t> out;
  if (!any) return out;
  auto collect = [&](auto&& self, unsigned start, std::uint64_t clique, unsigned size,
                     bool has_tight) -> void {
    if (size == best) {
      if (has_tight || !need_tight) out.push_back(clique);
      return;
    }
    for (unsigned i = start; i < count; ++i) {
      if (size + (count - i) < best) break;
      if ((adj[i] & clique) != clique) continue;
      self(self, i + 1, clique | (1ull << i), size + 1,
           has_tight || (tight.empty() ? false : (tight[i] & clique) != 0));
    }
  };
  if (best == 0) {
    if (!need_tight) out.push_back(0);
    return out;
  }
  collect(collect, 0, 0, 0, false);
  return out;
}

}  // namespace

RadiusDecomposition normalize_radius(const WeightTable& w, std::uint64_t r) {
  require_valid_weight(w);
  unsigned max_weight = *std::max_element(w.values().begin(), w.values().end());
  RadiusDecomposition out;
  out.requested = r;
  out.R = r / max_weight;
  std::uint64_t s = r % max_weight;
  // Drop an unrealizable part down to the next weight value; the ball is
  // unchanged because no vector weight lies in between.
  std::uint64_t realizable = 0;
  for (unsigned v : w.values())
    if (v <= s) realizable = std::max<std::uint64_t>(realizable, v);
  out.S = realizable;
  out.normalized = out.S + out.R * max_weight;
  return out;
}

BallSizeResult ball_size(const WeightTable& w, unsigned n, std::uint64_t D) {
  BallSizeResult out;
  out.radius = normalize_radius(w, D);
  std::uint64_t qn = pow_u64(w.q(), n);
  if (out.radius.R > n || (out.radius.R == n && out.radius.S > 0)) {
    out.size = qn;
    out.whole_space = true;
    out.clamped = true;
    return out;
  }
  if (out.radius.R == n) {  // S = 0: exactly the whole space
    out.size = qn;
    out.whole_space = true;
    return out;
  }
  std::uint64_t factor = 1;
  if (out.radius.S > 0) factor += weight_interval(w, out.radius.S).preimage_count;
  out.size = pow_u64(w.q(), static_cast<unsigned>(out.radius.R)) * factor;
  return out;
}

std::vector<Vector> ball(const MetricSpace& space, const Vector& center, std::uint64_t D,
                         std::uint64_t budget) {
  if (center.size() != space.dimension())
    throw ValidationError("center length does not match dimension");
  std::vector<Vector> out;
  bool fast = space.chain();
  for_each_vector(
      space.field(), space.dimension(),
      [&](const Vector& v) {
        Vector d = space.subtract(v, center);
        std::uint64_t dist = fast ? space.chain_weight(d) : space.wp_weight(d);
        if (dist <= D) out.push_back(v);
      },
      budget);
  return out;
}

std::uint64_t diameter(const MetricSpace& space, const std::vector<Vector>& A) {
  if (A.empty()) throw DomainError("diameter of an empty set");
  bool fast = space.chain();
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      Vector d = space.subtract(A[i], A[j]);
      best = std::max(best, fast ? space.chain_weight(d) : space.wp_weight(d));
    }
  return best;
}

ProductBoundCheck distance_set_product_bound(const MetricSpace& space,
                                             const std::vector<Vector>& A,
                                             const std::vector<Vector>& B) {
  if (A.empty() || B.empty()) throw DomainError("product bound needs nonempty sets");
  bool fast = space.chain();
  auto distance_set = [&](const std::vector<Vector>& X) {
    std::set<std::uint64_t> out;
    for (std::size_t i = 0; i < X.size(); ++i)
      for (std::size_t j = i + 1; j < X.size(); ++j) {
        Vector d = space.subtract(X[i], X[j]);
        out.insert(fast ? space.chain_weight(d) : space.wp_weight(d));
      }
    out.erase(0);
    return out;
  };
  std::set<std::uint64_t> da = distance_set(A);
  std::set<std::uint64_t> db = distance_set(B);
  ProductBoundCheck out;
  out.disjoint = true;
  for (std::uint64_t d : da)
    if (db.count(d)) {
      out.disjoint = false;
      break;
    }
  out.product = std::uint64_t(A.size()) * B.size();
  out.space_size = pow_u64(space.field().q(), space.dimension());
  out.bound_holds = out.product <= out.space_size;
  return out;
}

WFamilies w_families(const WeightTable& w, std::uint64_t S) {
  WeightStats stats = weight_stats(w);
  const Field& f = w.field();
  WFamilies out;
  out.S = S;
  out.lower_defined = S >= stats.threshold && S <= stats.max_weight;
  bool in_image = std::binary_search(stats.image.begin(), stats.image.end(), S) && S > 0;
  out.upper_defined = in_image && S >= stats.min_nonzero_weight && S <= stats.max_weight;
  if (!out.lower_defined && !out.upper_defined)
    throw DomainError("threshold " + std::to_string(S) + " is outside both family ranges");

  auto members_from_masks = [&](const std::vector<FieldElement>& candidates,
                                const std::vector<std::uint64_t>& masks) {
    std::vector<std::vector<FieldElement>> family;
    for (std::uint64_t mask : masks) {
      std::vector<FieldElement> member;
      for (unsigned i = 0; i < candidates.size(); ++i)
        if (mask & (1ull << i)) member.push_back(candidates[i]);
      family.push_back(std::move(member));
    }
    std::sort(family.begin(), family.end(),
              [](const auto& a, const auto& b) { return a < b; });
    return family;
  };

  if (out.lower_defined) {
    // Candidates: weight within [threshold, S], and within difference-weight S
    // of everything strictly below the threshold.
    std::vector<FieldElement> candidates;
    for (unsigned a = 1; a < f.q(); ++a) {
      unsigned wa = w.values()[a];
      if (wa < stats.threshold || wa > S) continue;
      bool ok = true;
      for (unsigned b = 0; ok && b < f.q(); ++b) {
        if (w.values()[b] >= stats.threshold) continue;
        if (w.values()[f.sub(f.element(a), f.element(b)).index] > S) ok = false;
      }
      if (ok) candidates.push_back(f.element(a));
    }
    std::vector<std::uint64_t> adj(candidates.size(), 0);
    for (unsigned i = 0; i < candidates.size(); ++i)
      for (unsigned j = 0; j < candidates.size(); ++j)
        if (i != j && w.values()[f.sub(candidates[i], candidates[j]).index] <= S)
          adj[i] |= 1ull << j;
    out.lower = members_from_masks(
        candidates, all_max_subsets(static_cast<unsigned>(candidates.size()), adj, {}, false));
  }

  if (out.upper_defined) {
    std::vector<FieldElement> candidates;
    for (unsigned a = 0; a < f.q(); ++a) candidates.push_back(f.element(a));
    std::vector<std::uint64_t> adj(candidates.size(), 0);
    std::vector<std::uint64_t> tight(candidates.size(), 0);
    for (unsigned i = 0; i < candidates.size(); ++i)
      for (unsigned j = 0; j < candidates.size(); ++j) {
        if (i == j) continue;
        unsigned d = w.values()[f.sub(candidates[i], candidates[j]).index];
        if (d >= S) adj[i] |= 1ull << j;
        if (d == S) tight[i] |= 1ull << j;
      }
    out.upper = members_from_masks(
        candidates, all_max_subsets(static_cast<unsigned>(candidates.size()), adj, tight, true));
  }
  return out;
}

AnticodeSize optimal_anticode_size(const WeightTable& w, unsigned n, std::uint64_t D) {
  WeightStats stats = weight_stats(w);
  AnticodeSize out;
  out.radius = normalize_radius(w, D);
  out.threshold = stats.threshold;
  out.branch = out.radius.S < stats.threshold ? AnticodeBranch::below_threshold
                                              : AnticodeBranch::at_or_above_threshold;
  std::uint64_t qn = pow_u64(w.q(), n);
  if (out.radius.R >= n) {
    out.a_star = qn;
    out.whole_space = true;
    return out;
  }
  std::uint64_t factor = 1;
  if (out.branch == AnticodeBranch::below_threshold) {
    if (out.radius.S > 0) factor += weight_interval(w, out.radius.S).preimage_count;
  } else {
    factor += weight_interval(w, stats.threshold - 1).preimage_count;
    WFamilies fam = w_families(w, out.radius.S);
    factor += fam.lower.empty() ? 0 : fam.lower.front().size();
  }
  out.a_star = pow_u64(w.q(), static_cast<unsigned>(out.radius.R)) * factor;
  if (factor >= w.q()) throw Error("anticode size bound violated");  // factor < q always
  return out;
}

std::vector<Vector> build_optimal_anticode(const WeightTable& w, unsigned n, const Vector& center,
                                           std::uint64_t D,
                                           const std::optional<std::vector<FieldElement>>& K) {
  MetricSpace space = chain_space(w, n);
  if (center.size() != n) throw ValidationError("center length does not match dimension");
  AnticodeSize info = optimal_anticode_size(w, n, D);
  if (info.whole_space || info.branch == AnticodeBranch::below_threshold) {
    if (K.has_value())
      throw ValidationError("K applies only to radii at or above the threshold");
    return ball(space, center, info.radius.normalized);
  }

  WFamilies fam = w_families(w, info.radius.S);
  std::vector<FieldElement> chosen;
  if (K.has_value()) {
    chosen = *K;
    std::sort(chosen.begin(), chosen.end());
    if (std::find(fam.lower.begin(), fam.lower.end(), chosen) == fam.lower.end())
      throw ValidationError("K is not a maximum member of the lower family at S = " +
                            std::to_string(info.radius.S));
  } else {
    if (fam.lower.empty()) throw DomainError("lower family is empty");
    chosen = fam.lower.front();
  }

  unsigned R = static_cast<unsigned>(info.radius.R);
  std::uint64_t inner = floor_weight(w, 1, info.threshold) + std::uint64_t(R) * space.max_weight();
  std::vector<Vector> out = ball(space, center, inner);
  // Translated star block: free prefix of length R, a family element at
  // coordinate R+1, zero above.
  std::uint64_t prefixes = pow_u64(w.q(), R);
  for (FieldElement a : chosen)
    for (std::uint64_t rank = 0; rank < prefixes; ++rank) {
      Vector v = vector_from_rank(w.field(), n, rank);
      v[R] = a;
      out.push_back(space.add(center, v));
    }
  std::sort(out.begin(), out.end(), [&](const Vector& x, const Vector& y) {
    return vector_rank(w.field(), x) < vector_rank(w.field(), y);
  });
  return out;
}

AnticodeCheck is_optimal_anticode(const std::vector<Vector>& A, const WeightTable& w, unsigned n,
                                  std::uint64_t D) {
  if (A.empty()) throw DomainError("empty set cannot be checked for optimality");
  MetricSpace space = chain_space(w, n);
  for (const Vector& v : A)
    if (v.size() != n) throw ValidationError("set member length does not match dimension");
  std::vector<std::uint64_t> ranks = sorted_ranks(w.field(), A);
  if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end())
    throw ValidationError("duplicate vector in set");

  AnticodeCheck out;
  out.diameter = diameter(space, A);
  AnticodeSize info = optimal_anticode_size(w, n, D);
  out.a_star = info.a_star;
  out.optimal = out.diameter <= D && A.size() == info.a_star;
  if (!out.optimal) return out;

  std::vector<Vector> members(A);
  std::sort(members.begin(), members.end(), [&](const Vector& x, const Vector& y) {
    return vector_rank(w.field(), x) < vector_rank(w.field(), y);
  });

  if (info.whole_space || info.branch == AnticodeBranch::below_threshold) {
    for (const Vector& x : members) {
      std::vector<Vector> b = ball(space, x, info.radius.normalized);
      if (sorted_ranks(w.field(), b) == ranks) {
        out.form = AnticodeForm::ball;
        out.center = x;
        return out;
      }
    }
    return out;
  }

  unsigned R = static_cast<unsigned>(info.radius.R);
  WFamilies fam = w_families(w, info.radius.S);
  for (const Vector& x : members) {
    // Recover K from the members whose offset tops out at coordinate R+1.
    std::set<FieldElement> recovered;
    bool shape_ok = true;
    for (const Vector& v : members) {
      Vector d = space.subtract(v, x);
      unsigned top = 0;
      for (unsigned i = n; i-- > 0;)
        if (d[i].index != 0) {
          top = i + 1;
          break;
        }
      if (top == R + 1) recovered.insert(d[R]);
      if (top > R + 1) {
        shape_ok = false;
        break;
      }
    }
    if (!shape_ok) continue;
    std::vector<FieldElement> K(recovered.begin(), recovered.end());
    if (std::find(fam.lower.begin(), fam.lower.end(), K) == fam.lower.end()) continue;
    std::vector<Vector> built = build_optimal_anticode(w, n, x, D, K);
    if (sorted_ranks(w.field(), built) == ranks) {
      out.form = AnticodeForm::translated_star;
      out.center = x;
      out.K = K;
      return out;
    }
  }
  return out;
}

}  // namespace chainmetric
