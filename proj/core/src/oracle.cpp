#include "chainmetric/oracle.hpp"

#include <algorithm>
#include <string>

#include "chainmetric/errors.hpp"

namespace chainmetric {
namespace {

// invariant: oracles measure through the ideal/maximal-support route only
std::uint64_t dist(const MetricSpace& space, const Vector& u, const Vector& v) {
  return space.wp_weight(space.subtract(u, v));
}

// Exact maximum clique, vertices 0..n-1, adjacency as bitset rows.
class CliqueSolver {
 public:
  explicit CliqueSolver(std::vector<std::vector<std::uint64_t>> adj)
      : adj_(std::move(adj)), n_(static_cast<unsigned>(adj_.size())) {}

  unsigned max_clique_size() {
    best_ = 0;
    std::vector<unsigned> candidates(n_);
    for (unsigned i = 0; i < n_; ++i) candidates[i] = i;
    expand(candidates, 0);
    return best_;
  }

  // All cliques of exactly `target` vertices, each as a sorted vertex list.
  std::vector<std::vector<unsigned>> cliques_of_size(unsigned target, std::uint64_t set_budget) {
    target_ = target;
    set_budget_ = set_budget;
    found_.clear();
    current_.clear();
    if (target == 0) return found_;
    std::vector<unsigned> candidates(n_);
    for (unsigned i = 0; i < n_; ++i) candidates[i] = i;
    collect(candidates);
    return found_;
  }

 private:
  bool edge(unsigned a, unsigned b) const { return adj_[a][b >> 6] & (1ull << (b & 63)); }

  // Greedy coloring bound: vertices grouped into independent color classes;
  // a clique meets each class at most once.
  static std::vector<unsigned> color_order(const std::vector<unsigned>& candidates,
                                           const CliqueSolver& g, std::vector<unsigned>& colors) {
    std::vector<std::vector<unsigned>> classes;
    for (unsigned v : candidates) {
      bool placed = false;
      for (auto& cls : classes) {
        bool clash = false;
        for (unsigned u : cls)
          if (g.edge(u, v)) {
            clash = true;
            break;
          }
        if (!clash) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    std::vector<unsigned> order;
    colors.clear();
    for (unsigned c = 0; c < classes.size(); ++c)
      for (unsigned v : classes[c]) {
        order.push_back(v);
        colors.push_back(c + 1);
      }
    return order;
  }

  void expand(const std::vector<unsigned>& candidates, unsigned depth) {
    if (candidates.empty()) {
      best_ = std::max(best_, depth);
      return;
    }
    std::vector<unsigned> colors;
    std::vector<unsigned> order = color_order(candidates, *this, colors);
    for (unsigned i = static_cast<unsigned>(order.size()); i-- > 0;) {
      if (depth + colors[i] <= best_) return;
      unsigned v = order[i];
      std::vector<unsigned> next;
      for (unsigned j = 0; j < i; ++j)
        if (edge(v, order[j])) next.push_back(order[j]);
      expand(next, depth + 1);
    }
    best_ = std::max(best_, depth);
  }

  void collect(const std::vector<unsigned>& candidates) {
    if (current_.size() == target_) {
      if (found_.size() >= set_budget_)
        throw BudgetError("maximum-set enumeration exceeded " + std::to_string(set_budget_) +
                          " sets");
      found_.push_back(current_);
      return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current_.size() + (candidates.size() - i) < target_) return;
      unsigned v = candidates[i];
      std::vector<unsigned> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (edge(v, candidates[j])) next.push_back(candidates[j]);
      current_.push_back(v);
      collect(next);
      current_.pop_back();
    }
  }

  std::vector<std::vector<std::uint64_t>> adj_;
  unsigned n_ = 0;
  unsigned best_ = 0;
  unsigned target_ = 0;
  std::uint64_t set_budget_ = 0;
  std::vector<std::vector<unsigned>> found_;
  std::vector<unsigned> current_;
};

// Neighborhood of zero under radius D, plus its induced adjacency. Any
// maximum set can be translated to contain zero, so this subgraph carries
// all the structure the searches need.
struct ZeroNeighborhood {
  std::vector<Vector> vertices;                    // nonzero, weight <= D, rank order
  std::vector<std::vector<std::uint64_t>> adj;     // pairwise distance <= D
};

ZeroNeighborhood zero_neighborhood(const MetricSpace& space, std::uint64_t D,
                                   std::uint64_t vertex_budget) {
  std::uint64_t size = space_size_checked(space.field(), space.dimension(), vertex_budget);
  (void)size;
  ZeroNeighborhood out;
  for_each_vector(space.field(), space.dimension(), [&](const Vector& v) {
    if (space.wp_weight(v) == 0) return;
    if (space.wp_weight(v) <= D) out.vertices.push_back(v);
  });
  unsigned m = static_cast<unsigned>(out.vertices.size());
  out.adj.assign(m, std::vector<std::uint64_t>((m + 63) / 64, 0));
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = i + 1; j < m; ++j)
      if (dist(space, out.vertices[i], out.vertices[j]) <= D) {
        out.adj[i][j >> 6] |= 1ull << (j & 63);
        out.adj[j][i >> 6] |= 1ull << (i & 63);
      }
  return out;
}

}  // namespace

std::uint64_t brute_ball_size(const MetricSpace& space, const Vector& center, std::uint64_t D,
                              std::uint64_t budget) {
  if (center.size() != space.dimension())
    throw ValidationError("center length does not match dimension");
  std::uint64_t count = 0;
  for_each_vector(
      space.field(), space.dimension(),
      [&](const Vector& v) {
        if (dist(space, v, center) <= D) ++count;
      },
      budget);
  return count;
}

std::uint64_t brute_a_star(const MetricSpace& space, std::uint64_t D,
                           std::uint64_t vertex_budget) {
  ZeroNeighborhood g = zero_neighborhood(space, D, vertex_budget);
  return 1 + CliqueSolver(std::move(g.adj)).max_clique_size();
}

BruteAnticodeResult brute_optimal_anticodes(const MetricSpace& space, std::uint64_t D,
                                            std::uint64_t vertex_budget,
                                            std::uint64_t set_budget) {
  ZeroNeighborhood g = zero_neighborhood(space, D, vertex_budget);
  CliqueSolver solver(g.adj);
  unsigned best = solver.max_clique_size();
  BruteAnticodeResult out;
  out.a_star = best + 1;
  Vector zero(space.dimension(), space.field().zero());
  if (best == 0) {
    out.maximum_sets.push_back({zero});
    return out;
  }
  for (const std::vector<unsigned>& clique : solver.cliques_of_size(best, set_budget)) {
    std::vector<Vector> members;
    members.push_back(zero);
    for (unsigned v : clique) members.push_back(g.vertices[v]);
    out.maximum_sets.push_back(std::move(members));
  }
  auto rank_key = [&](const std::vector<Vector>& set) {
    std::vector<std::uint64_t> key;
    for (const Vector& v : set) key.push_back(vector_rank(space.field(), v));
    return key;
  };
  std::sort(out.maximum_sets.begin(), out.maximum_sets.end(),
            [&](const auto& a, const auto& b) { return rank_key(a) < rank_key(b); });
  return out;
}

std::uint64_t brute_min_weighted_distance(const MetricSpace& space,
                                          const std::vector<Vector>& words) {
  if (words.size() < 2) throw DomainError("minimum distance needs at least two words");
  std::uint64_t best = UINT64_MAX;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, dist(space, words[i], words[j]));
  return best;
}

std::uint64_t brute_packing_radius(const MetricSpace& space, const std::vector<Vector>& words,
                                   std::uint64_t budget) {
  if (words.size() < 2) throw DomainError("packing radius needs at least two words");
  std::uint64_t size = space_size_checked(space.field(), space.dimension(), budget);
  if (size * words.size() > budget)
    throw BudgetError("packing scan needs " + std::to_string(size * words.size()) +
                      " distance evaluations, budget is " + std::to_string(budget));
  // Collision radius of a pair: smallest r with a common point in both balls.
  std::uint64_t min_collision = UINT64_MAX;
  std::vector<std::uint64_t> dv(words.size());
  for_each_vector(space.field(), space.dimension(), [&](const Vector& v) {
    for (std::size_t i = 0; i < words.size(); ++i) dv[i] = dist(space, v, words[i]);
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j)
        min_collision = std::min(min_collision, std::max(dv[i], dv[j]));
  });
  if (min_collision == 0) throw ValidationError("duplicate words in packing scan");
  return min_collision - 1;
}

std::uint64_t brute_covering_radius(const MetricSpace& space, const std::vector<Vector>& words,
                                    std::uint64_t budget) {
  if (words.empty()) throw DomainError("covering radius needs at least one word");
  std::uint64_t worst = 0;
  for_each_vector(
      space.field(), space.dimension(),
      [&](const Vector& v) {
        std::uint64_t nearest = UINT64_MAX;
        for (const Vector& w : words) nearest = std::min(nearest, dist(space, v, w));
        worst = std::max(worst, nearest);
      },
      budget);
  return worst;
}

}  // namespace chainmetric
