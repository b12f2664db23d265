#include "chainmetric/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "chainmetric/anticode.hpp"
#include "chainmetric/codes.hpp"
#include "chainmetric/errors.hpp"
#include "chainmetric/metric.hpp"
#include "chainmetric/oracle.hpp"
#include "chainmetric/poset.hpp"
#include "chainmetric/weight.hpp"

namespace chainmetric {
namespace {

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  while (exp--) out *= base;
  return out;
}

// Every check derives its randomness from (config seed, check id) alone, and
// all draws go through plain modulo so runs are reproducible across platforms.
std::mt19937 rng_for(const SweepConfig& config, const std::string& id) {
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : id) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  h ^= config.seed + 0x9e3779b97f4a7c15ull;
  return std::mt19937(static_cast<std::uint32_t>(h ^ (h >> 32)));
}

unsigned pick(std::mt19937& rng, unsigned bound) { return static_cast<unsigned>(rng() % bound); }

struct Check {
  CheckResult r;
  explicit Check(std::string id) { r.id = std::move(id); }
  bool ok() const { return r.status == CheckStatus::passed; }
  void fail(const std::string& detail) {
    if (r.status == CheckStatus::passed) {
      r.status = CheckStatus::failed;
      r.detail = detail;
    }
  }
};

std::string describe_weight(const WeightTable& w) {
  std::ostringstream out;
  out << "q=" << w.q() << " w=[";
  for (std::size_t i = 0; i < w.values().size(); ++i) {
    if (i) out << ",";
    out << w.values()[i];
  }
  out << "]";
  return out.str();
}

std::string describe_vector(const Vector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i].index;
  }
  out << ")";
  return out.str();
}

std::string describe_words(const std::vector<Vector>& words, std::size_t cap = 8) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < words.size() && i < cap; ++i) {
    if (i) out << ",";
    out << describe_vector(words[i]);
  }
  if (words.size() > cap) out << ",... " << words.size() << " words";
  out << "}";
  return out.str();
}

// Hamming, Lee where it exists, then seeded random tables.
std::vector<WeightTable> weight_family(const Field& f, unsigned random_count, std::mt19937& rng,
                                       unsigned max_value = 6) {
  std::vector<WeightTable> out;
  out.push_back(make_standard_weight(f, WeightKind::hamming));
  if (f.k() == 1 && f.p() >= 3) out.push_back(make_standard_weight(f, WeightKind::lee));
  for (unsigned i = 0; i < random_count; ++i) out.push_back(random_weight_table(f, max_value, rng));
  return out;
}

std::vector<std::pair<unsigned, unsigned>> qn_pairs(const std::vector<unsigned>& orders,
                                                    std::uint64_t cap) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned q : orders)
    for (unsigned n = 1; pow_u64(q, n) <= cap; ++n) out.emplace_back(q, n);
  return out;
}

MetricSpace chain_space(const WeightTable& w, unsigned n) {
  return MetricSpace(w.field(), n, Poset::chain(n), w);
}

Code random_code(const Field& f, unsigned n, unsigned size, std::mt19937& rng) {
  std::uint64_t space = pow_u64(f.q(), n);
  std::set<std::uint64_t> ranks;
  while (ranks.size() < size) ranks.insert(rng() % space);
  std::vector<Vector> words;
  for (std::uint64_t r : ranks) words.push_back(vector_from_rank(f, n, r));
  return Code(f, n, std::move(words));
}

Code random_linear_code(const Field& f, unsigned n, unsigned k, std::mt19937& rng) {
  std::vector<Vector> gens;
  for (unsigned i = 0; i < k; ++i) {
    Vector g(n, f.zero());
    for (unsigned j = 0; j < n; ++j) g[j] = f.element(pick(rng, f.q()));
    gens.push_back(std::move(g));
  }
  std::set<std::uint64_t> ranks;
  std::uint64_t combos = pow_u64(f.q(), k);
  for (std::uint64_t m = 0; m < combos; ++m) {
    Vector word(n, f.zero());
    std::uint64_t rest = m;
    for (unsigned i = 0; i < k; ++i) {
      FieldElement lambda = f.element(static_cast<unsigned>(rest % f.q()));
      rest /= f.q();
      for (unsigned j = 0; j < n; ++j)
        word[j] = f.add(word[j], f.mul(lambda, gens[i][j]));
    }
    ranks.insert(vector_rank(f, word));
  }
  std::vector<Vector> words;
  for (std::uint64_t r : ranks) words.push_back(vector_from_rank(f, n, r));
  return Code(f, n, std::move(words));
}

std::uint64_t pair_collision_radius(const MetricSpace& space, const Vector& u, const Vector& v) {
  std::uint64_t best = UINT64_MAX;
  for_each_vector(space.field(), space.dimension(), [&](const Vector& x) {
    std::uint64_t du = space.wp_weight(space.subtract(x, u));
    std::uint64_t dv = space.wp_weight(space.subtract(x, v));
    best = std::min(best, std::max(du, dv));
  });
  return best;
}

std::vector<std::uint64_t> set_ranks(const Field& f, const std::vector<Vector>& set) {
  std::vector<std::uint64_t> out;
  out.reserve(set.size());
  for (const Vector& v : set) out.push_back(vector_rank(f, v));
  std::sort(out.begin(), out.end());
  return out;
}

// The classified optimal anticodes through the zero vector: balls below the
// threshold, translated-star constructions at or above it.
std::vector<std::vector<std::uint64_t>> classified_sets_containing_zero(const WeightTable& w,
                                                                        unsigned n,
                                                                        std::uint64_t D) {
  MetricSpace space = chain_space(w, n);
  const Field& f = w.field();
  AnticodeSize info = optimal_anticode_size(w, n, D);
  std::uint64_t qn = pow_u64(f.q(), n);
  std::set<std::vector<std::uint64_t>> sets;
  if (info.whole_space) {
    std::vector<std::uint64_t> all(qn);
    for (std::uint64_t r = 0; r < qn; ++r) all[r] = r;
    sets.insert(all);
  } else if (info.branch == AnticodeBranch::below_threshold) {
    for (std::uint64_t r = 0; r < qn; ++r) {
      Vector x = vector_from_rank(f, n, r);
      if (space.chain_weight(x) > info.radius.normalized) continue;  // 0 must lie in the ball
      sets.insert(set_ranks(f, ball(space, x, info.radius.normalized)));
    }
  } else {
    WFamilies fam = w_families(w, info.radius.S);
    for (std::uint64_t r = 0; r < qn; ++r) {
      Vector x = vector_from_rank(f, n, r);
      for (const auto& K : fam.lower) {
        std::vector<std::uint64_t> ranks =
            set_ranks(f, build_optimal_anticode(w, n, x, D, K));
        if (!ranks.empty() && ranks.front() == 0) sets.insert(std::move(ranks));
      }
    }
  }
  return {sets.begin(), sets.end()};
}

std::string ranks_string(const std::vector<std::uint64_t>& ranks, std::size_t cap = 12) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < ranks.size() && i < cap; ++i) {
    if (i) out << ",";
    out << ranks[i];
  }
  if (ranks.size() > cap) out << ",...";
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------- checks --

CheckResult check_field_axioms(const SweepConfig&) {
  Check c("field-axioms");
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    Field f = Field::of_order(q);
    for (unsigned a = 0; a < q && c.ok(); ++a) {
      FieldElement ea = f.element(a);
      if (f.add(ea, f.neg(ea)).index != 0) c.fail("a + (-a) != 0 at q=" + std::to_string(q));
      if (a != 0 && f.mul(ea, f.inv(ea)).index != f.one().index)
        c.fail("a * a^-1 != 1 at q=" + std::to_string(q));
      if (f.mul(ea, f.one()).index != a) c.fail("a * 1 != a at q=" + std::to_string(q));
      for (unsigned b = 0; b < q && c.ok(); ++b) {
        FieldElement eb = f.element(b);
        if (f.add(ea, eb).index != f.add(eb, ea).index) c.fail("addition not commutative");
        if (f.mul(ea, eb).index != f.mul(eb, ea).index) c.fail("multiplication not commutative");
        for (unsigned d = 0; d < q; ++d) {
          FieldElement ed = f.element(d);
          ++c.r.cases;
          if (f.add(f.add(ea, eb), ed).index != f.add(ea, f.add(eb, ed)).index) {
            c.fail("addition not associative at q=" + std::to_string(q));
            break;
          }
          if (f.mul(f.mul(ea, eb), ed).index != f.mul(ea, f.mul(eb, ed)).index) {
            c.fail("multiplication not associative at q=" + std::to_string(q));
            break;
          }
          if (f.mul(ea, f.add(eb, ed)).index != f.add(f.mul(ea, eb), f.mul(ea, ed)).index) {
            c.fail("distributivity fails at q=" + std::to_string(q));
            break;
          }
        }
      }
    }
    // characteristic: p-fold sum of one vanishes
    FieldElement s = f.zero();
    for (unsigned i = 0; i < f.p(); ++i) s = f.add(s, f.one());
    if (s.index != 0) c.fail("characteristic is not p at q=" + std::to_string(q));
    if (!c.ok()) return c.r;
  }
  return c.r;
}

CheckResult check_weight_validation(const SweepConfig& config) {
  Check c("weight-validation");
  Field f5 = Field::of_order(5);
  auto expect = [&](const std::vector<unsigned>& values, WeightAxiom axiom) {
    ++c.r.cases;
    WeightTable w(f5, values);
    auto violations = validate_weight(w);
    if (violations.empty()) {
      c.fail("invalid table accepted: " + describe_weight(w));
      return;
    }
    bool named = false;
    for (const WeightViolation& v : violations) named = named || v.axiom == axiom;
    if (!named) c.fail("wrong axiom reported for " + describe_weight(w));
    if (is_valid_weight(w)) c.fail("is_valid_weight disagrees with validate_weight");
    try {
      require_valid_weight(w);
      c.fail("require_valid_weight did not throw");
    } catch (const ValidationError&) {
    }
  };
  expect({1, 1, 2, 2, 1}, WeightAxiom::zero_iff_zero);  // w(0) != 0
  expect({0, 0, 2, 2, 0}, WeightAxiom::zero_iff_zero);  // w(a) = 0 for a != 0
  expect({0, 1, 2, 2, 2}, WeightAxiom::symmetry);       // w(1) != w(-1)
  expect({0, 1, 3, 3, 1}, WeightAxiom::triangle);       // w(1+1) > w(1) + w(1)
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    Field f = Field::of_order(q);
    for (unsigned i = 0; i < config.random_weights; ++i) {
      ++c.r.cases;
      WeightTable w = random_weight_table(f, 6, rng);
      if (!is_valid_weight(w)) c.fail("generator produced invalid table " + describe_weight(w));
    }
  }
  return c.r;
}

CheckResult check_chain_weight_agreement(const SweepConfig& config) {
  Check c("chain-weight-agreement");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned q : {2u, 3u, 5u, 7u}) {
    Field f = Field::of_order(q);
    for (const WeightTable& w : weight_family(f, config.heavy_random_weights, rng)) {
      for (unsigned n = 1; n <= 3; ++n) {
        // usual chain and a relabeled chain: the shortcut must match the
        // ideal route on both
        std::vector<Poset> chains;
        chains.push_back(Poset::chain(n));
        if (n == 3) chains.push_back(Poset::from_covers(3, {{2, 1}, {1, 3}}));
        for (const Poset& p : chains) {
          MetricSpace space(f, n, p, w);
          bool bad = false;
          for_each_vector(f, n, [&](const Vector& v) {
            ++c.r.cases;
            if (space.chain_weight(v) != space.wp_weight(v) && !bad) {
              bad = true;
              c.fail("shortcut disagrees with ideal route at " + describe_vector(v) + " " +
                     describe_weight(w));
            }
          });
          if (!c.ok()) return c.r;
        }
      }
    }
  }
  return c.r;
}

CheckResult check_floor_weight_properties(const SweepConfig& config) {
  Check c("floor-weight-properties");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    Field f = Field::of_order(q);
    for (const WeightTable& w : weight_family(f, config.heavy_random_weights, rng)) {
      WeightStats stats = weight_stats(w);
      for (unsigned n = 1; n <= 3; ++n) {
        std::vector<std::uint64_t> radii = realizable_radii(w, n);
        std::uint64_t prev = 0;
        for (std::uint64_t D = 1; D <= std::uint64_t(n) * stats.max_weight + 2; ++D) {
          ++c.r.cases;
          std::uint64_t fl = floor_weight(w, n, D);
          std::uint64_t expected = 0;
          for (std::uint64_t r : radii)
            if (r < D) expected = std::max(expected, r);
          if (fl != expected || fl >= D || fl < prev) {
            c.fail("floor of " + std::to_string(D) + " is " + std::to_string(fl) + ", expected " +
                   std::to_string(expected) + " for " + describe_weight(w) +
                   " n=" + std::to_string(n));
            return c.r;
          }
          prev = fl;
        }
      }
    }
  }
  return c.r;
}

CheckResult check_radius_normalization(const SweepConfig& config) {
  Check c("radius-normalization");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    Field f = Field::of_order(q);
    for (const WeightTable& w : weight_family(f, config.heavy_random_weights, rng)) {
      WeightStats stats = weight_stats(w);
      for (unsigned n = 1; n <= 2; ++n) {
        MetricSpace space = chain_space(w, n);
        Vector zero(n, f.zero());
        for (std::uint64_t D = 0; D <= std::uint64_t(n) * stats.max_weight + 3; ++D) {
          ++c.r.cases;
          RadiusDecomposition rd = normalize_radius(w, D);
          bool s_ok = rd.S == 0 || std::binary_search(stats.image.begin(), stats.image.end(),
                                                      static_cast<unsigned>(rd.S));
          if (rd.S >= stats.max_weight || !s_ok || rd.S + rd.R * stats.max_weight != rd.normalized ||
              rd.normalized > D) {
            c.fail("bad decomposition of D=" + std::to_string(D) + " for " + describe_weight(w));
            return c.r;
          }
          if (ball(space, zero, D) != ball(space, zero, rd.normalized)) {
            c.fail("normalization changed the ball at D=" + std::to_string(D) + " for " +
                   describe_weight(w));
            return c.r;
          }
        }
      }
    }
  }
  return c.r;
}

CheckResult check_ball_size_formula(const SweepConfig& config) {
  Check c("ball-size-formula");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    Field f = Field::of_order(q);
    for (const WeightTable& w : weight_family(f, config.random_weights, rng)) {
      for (unsigned n = 1; n <= 4; ++n) {
        MetricSpace space = chain_space(w, n);
        Vector zero(n, f.zero());
        for (std::uint64_t D : realizable_radii(w, n)) {
          ++c.r.cases;
          std::uint64_t formula = ball_size(w, n, D).size;
          std::uint64_t brute = brute_ball_size(space, zero, D, config.budget);
          if (formula != brute) {
            c.fail("formula " + std::to_string(formula) + " != enumeration " +
                   std::to_string(brute) + " at D=" + std::to_string(D) + " n=" +
                   std::to_string(n) + " " + describe_weight(w));
            return c.r;
          }
        }
      }
    }
  }
  return c.r;
}

CheckResult check_anticode_size_closed_form(const SweepConfig& config) {
  Check c("anticode-size-closed-form");
  for (auto [q, n] : qn_pairs({2, 3, 4, 5, 7, 8, 9}, 125)) {
    Field f = Field::of_order(q);
    std::mt19937 wrng = rng_for(config, c.r.id + "-" + std::to_string(q));
    for (const WeightTable& w : weight_family(f, config.heavy_random_weights, wrng)) {
      MetricSpace space = chain_space(w, n);
      for (std::uint64_t D : realizable_radii(w, n)) {
        ++c.r.cases;
        std::uint64_t formula = optimal_anticode_size(w, n, D).a_star;
        std::uint64_t brute = brute_a_star(space, D, 125);
        if (formula != brute) {
          c.fail("closed form " + std::to_string(formula) + " != maximum clique " +
                 std::to_string(brute) + " at D=" + std::to_string(D) + " n=" + std::to_string(n) +
                 " " + describe_weight(w));
          return c.r;
        }
      }
    }
  }
  return c.r;
}

CheckResult check_anticode_classification(const SweepConfig& config) {
  Check c("anticode-classification");
  // Aggregate across the whole sweep: both defect directions are counted and
  // the first instance of each is kept for the report.
  std::uint64_t unclassified = 0;
  std::uint64_t non_maximum = 0;
  std::string first_unclassified;
  std::string first_non_maximum;
  for (auto [q, n] : qn_pairs({2, 3, 4, 5, 7, 8, 9}, 64)) {
    Field f = Field::of_order(q);
    std::mt19937 wrng = rng_for(config, c.r.id + "-" + std::to_string(q));
    for (const WeightTable& w : weight_family(f, config.heavy_random_weights, wrng)) {
      MetricSpace space = chain_space(w, n);
      for (std::uint64_t D : realizable_radii(w, n)) {
        ++c.r.cases;
        BruteAnticodeResult brute = brute_optimal_anticodes(space, D, 64, 100000);
        std::vector<std::vector<std::uint64_t>> listed;
        for (const auto& set : brute.maximum_sets) listed.push_back(set_ranks(f, set));
        std::sort(listed.begin(), listed.end());
        std::vector<std::vector<std::uint64_t>> classified =
            classified_sets_containing_zero(w, n, D);
        if (listed == classified) continue;
        std::string at = "at D=" + std::to_string(D) + " n=" + std::to_string(n) + " " +
                         describe_weight(w);
        for (const auto& s : listed)
          if (!std::binary_search(classified.begin(), classified.end(), s)) {
            ++unclassified;
            if (first_unclassified.empty())
              first_unclassified =
                  "maximum set " + ranks_string(s) + " matches no construction " + at;
            break;
          }
        for (const auto& s : classified)
          if (!std::binary_search(listed.begin(), listed.end(), s)) {
            ++non_maximum;
            if (first_non_maximum.empty())
              first_non_maximum = "construction " + ranks_string(s) + " is not a maximum set " + at;
            break;
          }
      }
    }
  }
  if (unclassified + non_maximum > 0) {
    std::string detail = std::to_string(unclassified + non_maximum) + " of " +
                         std::to_string(c.r.cases) + " instances break the exact set equality";
    if (!first_unclassified.empty()) detail += "; first: " + first_unclassified;
    if (!first_non_maximum.empty()) detail += "; first: " + first_non_maximum;
    c.fail(detail);
  }
  return c.r;
}

CheckResult check_ball_optimality_equivalence(const SweepConfig& config) {
  Check c("ball-optimality-equivalence");
  for (auto [q, n] : qn_pairs({2, 3, 4, 5, 7, 8, 9}, 64)) {
    Field f = Field::of_order(q);
    std::mt19937 wrng = rng_for(config, c.r.id + "-" + std::to_string(q));
    for (const WeightTable& w : weight_family(f, config.heavy_random_weights, wrng)) {
      MetricSpace space = chain_space(w, n);
      Vector zero(n, f.zero());
      for (std::uint64_t D : realizable_radii(w, n)) {
        ++c.r.cases;
        std::vector<Vector> B = ball(space, zero, D);
        bool ball_diameter_tight = diameter(space, B) == D;
        bool ball_is_optimal = B.size() == brute_a_star(space, D, 125);
        if (ball_diameter_tight != ball_is_optimal) {
          c.fail("ball diameter tightness and ball optimality disagree at D=" + std::to_string(D) +
                 " n=" + std::to_string(n) + " " + describe_weight(w));
          return c.r;
        }
        if (pow_u64(q, n) <= 32) {
          // third face of the equivalence: every maximum set through 0 is a
          // ball around each of its points
          BruteAnticodeResult brute = brute_optimal_anticodes(space, D, 32, 100000);
          bool all_are_balls = true;
          for (const auto& set : brute.maximum_sets)
            for (const Vector& x : set)
              if (set_ranks(f, set) != set_ranks(f, ball(space, x, D))) {
                all_are_balls = false;
                break;
              }
          if (all_are_balls != ball_diameter_tight) {
            c.fail("maximum-set shape disagrees with ball tightness at D=" + std::to_string(D) +
                   " n=" + std::to_string(n) + " " + describe_weight(w));
            return c.r;
          }
        }
      }
    }
  }
  return c.r;
}

CheckResult check_subspace_ball_structure(const SweepConfig& config) {
  Check c("subspace-ball-structure");
  for (auto [q, n] : qn_pairs({2, 3, 4, 5, 7}, 125)) {
    Field f = Field::of_order(q);
    std::mt19937 wrng = rng_for(config, c.r.id + "-" + std::to_string(q));
    for (const WeightTable& w : weight_family(f, config.heavy_random_weights, wrng)) {
      WeightStats stats = weight_stats(w);
      MetricSpace space = chain_space(w, n);
      Vector zero(n, f.zero());
      for (std::uint64_t D : realizable_radii(w, n)) {
        RadiusDecomposition rd = normalize_radius(w, D);
        if (rd.S >= stats.threshold || rd.R >= n) continue;
        ++c.r.cases;
        std::vector<Vector> B = ball(space, zero, D);
        std::set<std::uint64_t> members;
        for (const Vector& v : B) members.insert(vector_rank(f, v));
        bool closed = true;
        for (const Vector& x : B)
          for (const Vector& y : B) {
            for (unsigned lam = 0; lam < q && closed; ++lam) {
              Vector z = x;
              for (unsigned i = 0; i < n; ++i)
                z[i] = f.sub(x[i], f.mul(f.element(lam), y[i]));
              if (!members.count(vector_rank(f, z))) closed = false;
            }
            if (!closed) break;
          }
        if (closed != (rd.S == 0)) {
          c.fail("ball linearity should hold exactly when the remainder part vanishes; D=" +
                 std::to_string(D) + " n=" + std::to_string(n) + " " + describe_weight(w));
          return c.r;
        }
        if (rd.S == 0) {
          // the ball must be exactly the free-prefix block
          std::uint64_t expect = pow_u64(q, static_cast<unsigned>(rd.R));
          bool prefix = B.size() == expect;
          for (const Vector& v : B)
            for (unsigned i = static_cast<unsigned>(rd.R); i < n; ++i)
              if (v[i].index != 0) prefix = false;
          if (!prefix) {
            c.fail("radius a multiple of the maximum weight is not the prefix block; D=" +
                   std::to_string(D) + " " + describe_weight(w));
            return c.r;
          }
        }
      }
    }
  }
  return c.r;
}

CheckResult check_w_family_structure(const SweepConfig& config) {
  Check c("w-family-structure");
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    Field f = Field::of_order(q);
    std::mt19937 wrng = rng_for(config, c.r.id + "-" + std::to_string(q));
    for (const WeightTable& w : weight_family(f, config.heavy_random_weights, wrng)) {
      WeightStats stats = weight_stats(w);
      const auto& wv = w.values();
      for (std::uint64_t S = 1; S <= stats.max_weight; ++S) {
        bool lower_range = S >= stats.threshold;
        bool upper_range =
            std::binary_search(stats.image.begin(), stats.image.end(), static_cast<unsigned>(S));
        if (!lower_range && !upper_range) continue;
        ++c.r.cases;
        WFamilies fam = w_families(w, S);
        if (lower_range) {
          // independent route: scan all subsets of the nonzero elements
          std::vector<std::vector<unsigned>> best;
          std::size_t best_size = 0;
          for (std::uint32_t mask = 0; mask < (1u << (q - 1)); ++mask) {
            std::vector<unsigned> members;
            for (unsigned a = 1; a < q; ++a)
              if (mask & (1u << (a - 1))) members.push_back(a);
            bool ok = true;
            for (unsigned a : members) {
              if (wv[a] < stats.threshold || wv[a] > S) ok = false;
              for (unsigned b = 0; b < q && ok; ++b)
                if (wv[b] < stats.threshold &&
                    wv[f.sub(f.element(a), f.element(b)).index] > S)
                  ok = false;
            }
            for (std::size_t i = 0; i < members.size() && ok; ++i)
              for (std::size_t j = i + 1; j < members.size() && ok; ++j)
                if (wv[f.sub(f.element(members[i]), f.element(members[j])).index] > S) ok = false;
            if (!ok) continue;
            if (members.size() > best_size) {
              best_size = members.size();
              best.clear();
            }
            if (members.size() == best_size) best.push_back(members);
          }
          std::vector<std::vector<unsigned>> got;
          for (const auto& member : fam.lower) {
            std::vector<unsigned> m;
            for (FieldElement e : member) m.push_back(e.index);
            got.push_back(m);
          }
          std::sort(best.begin(), best.end());
          std::sort(got.begin(), got.end());
          if (best != got) {
            c.fail("lower family mismatch at S=" + std::to_string(S) + " " + describe_weight(w));
            return c.r;
          }
        }
        if (upper_range) {
          std::vector<std::vector<unsigned>> best;
          std::size_t best_size = 0;
          for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
            std::vector<unsigned> members;
            for (unsigned a = 0; a < q; ++a)
              if (mask & (1u << a)) members.push_back(a);
            bool ok = true;
            bool tight = false;
            for (std::size_t i = 0; i < members.size() && ok; ++i)
              for (std::size_t j = i + 1; j < members.size() && ok; ++j) {
                unsigned d = wv[f.sub(f.element(members[i]), f.element(members[j])).index];
                if (d < S) ok = false;
                if (d == S) tight = true;
              }
            if (!ok || !tight) continue;
            if (members.size() > best_size) {
              best_size = members.size();
              best.clear();
            }
            if (members.size() == best_size) best.push_back(members);
          }
          std::vector<std::vector<unsigned>> got;
          for (const auto& member : fam.upper) {
            std::vector<unsigned> m;
            for (FieldElement e : member) m.push_back(e.index);
            got.push_back(m);
          }
          std::sort(best.begin(), best.end());
          std::sort(got.begin(), got.end());
          if (best != got) {
            c.fail("upper family mismatch at S=" + std::to_string(S) + " " + describe_weight(w));
            return c.r;
          }
          if (!fam.upper.empty() && fam.upper.front().size() < 2) {
            c.fail("upper family member smaller than a realizing pair at S=" + std::to_string(S));
            return c.r;
          }
        }
      }
    }
  }
  return c.r;
}

CheckResult check_anticode_build_validity(const SweepConfig& config) {
  Check c("anticode-build-validity");
  for (auto [q, n] : qn_pairs({2, 3, 4, 5, 7, 8, 9}, 125)) {
    Field f = Field::of_order(q);
    std::mt19937 wrng = rng_for(config, c.r.id + "-" + std::to_string(q) + std::to_string(n));
    for (const WeightTable& w : weight_family(f, 3, wrng)) {
      MetricSpace space = chain_space(w, n);
      for (std::uint64_t D : realizable_radii(w, n)) {
        ++c.r.cases;
        AnticodeSize info = optimal_anticode_size(w, n, D);
        Vector center = vector_from_rank(f, n, wrng() % pow_u64(q, n));
        std::vector<Vector> A = build_optimal_anticode(w, n, center, D);
        if (A.size() != info.a_star || diameter(space, A) > D) {
          c.fail("construction size or diameter off at D=" + std::to_string(D) + " n=" +
                 std::to_string(n) + " " + describe_weight(w));
          return c.r;
        }
        AnticodeCheck chk = is_optimal_anticode(A, w, n, D);
        if (!chk.optimal || chk.form == AnticodeForm::none) {
          c.fail("construction not recognized as optimal at D=" + std::to_string(D) + " n=" +
                 std::to_string(n) + " " + describe_weight(w));
          return c.r;
        }
        if (!info.whole_space && info.branch == AnticodeBranch::at_or_above_threshold) {
          WFamilies fam = w_families(w, info.radius.S);
          for (const auto& K : fam.lower) {
            std::vector<Vector> AK = build_optimal_anticode(w, n, center, D, K);
            if (AK.size() != info.a_star || diameter(space, AK) > D) {
              c.fail("family member yields a non-optimal construction at D=" + std::to_string(D) +
                     " " + describe_weight(w));
              return c.r;
            }
          }
        }
      }
    }
  }
  return c.r;
}

CheckResult check_ultrametric_triple_scan(const SweepConfig& config) {
  Check c("ultrametric-triple-scan");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    Field f = Field::of_order(q);
    for (const WeightTable& w : weight_family(f, config.random_weights, rng)) {
      bool non_arch = weight_stats(w).non_archimedean;
      for (unsigned n = 1; n <= 3; ++n) {
        ++c.r.cases;
        MetricSpace space = chain_space(w, n);
        UltrametricCheck res = check_ultrametric(space);
        if (res.is_ultrametric != non_arch) {
          c.fail("triple scan says " + std::string(res.is_ultrametric ? "ultrametric" : "not") +
                 " but the weight is " + (non_arch ? "non-archimedean" : "archimedean") + " for " +
                 describe_weight(w) + " n=" + std::to_string(n));
          return c.r;
        }
      }
    }
  }
  return c.r;
}

CheckResult check_archimedean_ball_excess(const SweepConfig& config) {
  Check c("archimedean-ball-excess");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned q : {4u, 5u, 7u, 8u, 9u}) {
    Field f = Field::of_order(q);
    for (const WeightTable& w : weight_family(f, config.random_weights, rng)) {
      WeightStats stats = weight_stats(w);
      if (stats.non_archimedean) continue;
      for (unsigned n = 1; n <= 2; ++n) {
        ++c.r.cases;
        // the threshold radius ball contains a violating pair by definition
        MetricSpace space = chain_space(w, n);
        Vector zero(n, f.zero());
        std::vector<Vector> B = ball(space, zero, stats.threshold);
        if (diameter(space, B) <= stats.threshold) {
          c.fail("archimedean weight but the threshold ball has tight diameter: " +
                 describe_weight(w));
          return c.r;
        }
      }
    }
  }
  if (c.r.cases == 0) c.fail("no archimedean instances generated");
  return c.r;
}

CheckResult check_non_chain_ball_excess(const SweepConfig&) {
  Check c("non-chain-ball-excess");
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned q : {2u, 3u}) {
      if (n == 4 && q == 3) continue;  // 81 points x 219 posets adds nothing new
      Field f = Field::of_order(q);
      WeightTable w = make_standard_weight(f, WeightKind::hamming);
      for (const Poset& p : enumerate_posets(n)) {
        if (p.is_chain()) continue;
        ++c.r.cases;
        MetricSpace space(f, n, p, w);
        UltrametricCheck res = check_ultrametric(space);
        if (res.is_ultrametric) {
          c.fail("non-chain order is unexpectedly an ultrametric at n=" + std::to_string(n) +
                 " q=" + std::to_string(q));
          return c.r;
        }
        // witness (x, y, z) has d(x,y) > max{d(x,z), d(z,y)}: the ball around
        // z that holds both x and y has diameter above its radius
        const auto& t = *res.witness;
        std::uint64_t D = std::max(space.wp_weight(space.subtract(t[0], t[2])),
                                   space.wp_weight(space.subtract(t[2], t[1])));
        std::vector<Vector> B = ball(space, t[2], D);
        if (diameter(space, B) <= D) {
          c.fail("witness ball has tight diameter at n=" + std::to_string(n) +
                 " q=" + std::to_string(q));
          return c.r;
        }
      }
    }
  }
  return c.r;
}

CheckResult check_non_archimedean_ball_diameters(const SweepConfig& config) {
  Check c("non-archimedean-ball-diameters");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    Field f = Field::of_order(q);
    std::vector<WeightTable> tables = weight_family(f, config.random_weights, rng);
    tables.push_back(WeightTable(f, [&] {  // doubled Hamming: still non-archimedean
      std::vector<unsigned> v(q, 2);
      v[0] = 0;
      return v;
    }()));
    for (const WeightTable& w : tables) {
      if (!weight_stats(w).non_archimedean) continue;
      for (unsigned n = 1; n <= 3; ++n) {
        MetricSpace space = chain_space(w, n);
        Vector zero(n, f.zero());
        // balls share diameters across centers by translation invariance
        for (std::uint64_t D : realizable_radii(w, n)) {
          ++c.r.cases;
          if (diameter(space, ball(space, zero, D)) != D) {
            c.fail("realizable radius " + std::to_string(D) +
                   " has diameter != radius for non-archimedean " + describe_weight(w) +
                   " n=" + std::to_string(n));
            return c.r;
          }
        }
      }
    }
  }
  return c.r;
}

CheckResult check_mds_iff_perfect(const SweepConfig& config) {
  Check c("mds-iff-perfect");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned q : {2u, 3u, 5u}) {
    Field f = Field::of_order(q);
    std::vector<WeightTable> tables = weight_family(f, 3, rng);
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned d = 1; d <= n; ++d) {
        Code C = construct_mds(f, n, d);
        for (const WeightTable& w : tables) {
          ++c.r.cases;
          SingletonCheck sc = singleton_check(w, C);
          PerfectionCheck pc = is_perfect(w, C, config.budget);
          bool counting = C.size() * pow_u64(q, d - 1) == pow_u64(q, n);
          if (!sc.mds || !pc.perfect || !counting) {
            c.fail("constructed code fails the equivalence at q=" + std::to_string(q) + " n=" +
                   std::to_string(n) + " d=" + std::to_string(d) + " " + describe_weight(w));
            return c.r;
          }
        }
      }
  }
  return c.r;
}

CheckResult check_mds_diameter_perfect(const SweepConfig& config) {
  Check c("mds-diameter-perfect");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned q : {2u, 3u, 5u}) {
    Field f = Field::of_order(q);
    std::vector<WeightTable> tables = weight_family(f, 3, rng);
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned d = 1; d <= n; ++d) {
        Code C = construct_mds(f, n, d);
        for (const WeightTable& w : tables) {
          ++c.r.cases;
          WeightStats stats = weight_stats(w);
          MinDistances md = min_distances(w, C);
          DiameterPerfection dp = is_diameter_perfect(w, C);
          bool anchored = md.pair_weight == stats.min_nonzero_weight;
          bool floor_ok = dp.floor_radius == std::uint64_t(d - 1) * stats.max_weight;
          if (!anchored || !floor_ok || !dp.diameter_perfect || dp.product != dp.space_size) {
            c.fail("maximum-size code is not diameter perfect at q=" + std::to_string(q) + " n=" +
                   std::to_string(n) + " d=" + std::to_string(d) + " " + describe_weight(w));
            return c.r;
          }
        }
      }
  }
  return c.r;
}

CheckResult check_random_non_mds_strict(const SweepConfig& config) {
  Check c("random-non-mds-strict");
  std::mt19937 rng = rng_for(config, c.r.id);
  const std::vector<unsigned> orders = {2, 3, 5};
  unsigned produced = 0;
  unsigned attempts = 0;
  while (produced < 100 && attempts < 100000) {
    ++attempts;
    unsigned q = orders[pick(rng, orders.size())];
    unsigned n = 1 + pick(rng, 4);
    Field f = Field::of_order(q);
    std::uint64_t space = pow_u64(q, n);
    unsigned size = 2 + pick(rng, std::min<std::uint64_t>(7, space - 1));
    Code C = random_code(f, n, size, rng);
    std::vector<WeightTable> tables = weight_family(f, 1, rng);
    const WeightTable& w = tables[pick(rng, tables.size())];
    if (singleton_check(w, C).mds) continue;  // hunting strictly non-extremal codes
    ++produced;
    ++c.r.cases;
    PerfectionCheck pc = is_perfect(w, C, config.budget);
    DiameterPerfection dp = is_diameter_perfect(w, C);
    if (pc.perfect || dp.diameter_perfect || dp.product >= dp.space_size) {
      c.fail("non-extremal code reported perfect at q=" + std::to_string(q) + " n=" +
             std::to_string(n) + " " + describe_words(C.words()) + " " + describe_weight(w));
      return c.r;
    }
  }
  if (produced < 100) c.fail("could not generate enough non-extremal codes");
  return c.r;
}

CheckResult check_min_distance_structure(const SweepConfig& config) {
  Check c("min-distance-structure");
  for (auto [q, n] : qn_pairs({2, 3, 4, 5, 7, 8, 9}, 625)) {
    Field f = Field::of_order(q);
    std::mt19937 rng = rng_for(config, c.r.id + "-" + std::to_string(q) + "-" + std::to_string(n));
    std::vector<WeightTable> tables = weight_family(f, config.heavy_random_weights, rng);
    for (unsigned i = 0; i < config.random_codes; ++i) {
      ++c.r.cases;
      std::uint64_t space = pow_u64(q, n);
      unsigned size = 2 + pick(rng, std::min<std::uint64_t>(4, space - 1));
      Code C = random_code(f, n, size, rng);
      const WeightTable& w = tables[pick(rng, tables.size())];
      MinDistances md = min_distances(w, C);  // throws if the closed form drifts
      std::uint64_t brute = brute_min_weighted_distance(chain_space(w, n), C.words());
      if (md.weighted_distance != brute) {
        c.fail("structured distance " + std::to_string(md.weighted_distance) + " != pairwise " +
               std::to_string(brute) + " for " + describe_words(C.words()) + " " +
               describe_weight(w));
        return c.r;
      }
    }
  }
  return c.r;
}

CheckResult check_packing_radius_disjoint(const SweepConfig& config) {
  Check c("packing-radius-disjoint");
  for (auto [q, n] : qn_pairs({2, 3, 4, 5, 7, 8, 9}, 625)) {
    Field f = Field::of_order(q);
    std::mt19937 rng = rng_for(config, c.r.id + "-" + std::to_string(q) + "-" + std::to_string(n));
    std::vector<WeightTable> tables = weight_family(f, config.heavy_random_weights, rng);
    for (unsigned i = 0; i < config.random_codes; ++i) {
      ++c.r.cases;
      std::uint64_t space = pow_u64(q, n);
      unsigned size = 2 + pick(rng, std::min<std::uint64_t>(4, space - 1));
      Code C = random_code(f, n, size, rng);
      const WeightTable& w = tables[pick(rng, tables.size())];
      PackingRadiusCheck pr = verify_packing_radius(w, C, config.budget);
      if (!pr.disjoint_at_radius) {
        c.fail("balls collide at the formula radius " + std::to_string(pr.formula_radius) +
               " (true radius " + std::to_string(pr.enumerated_radius) + ") for " +
               describe_words(C.words()) + " " + describe_weight(w));
        return c.r;
      }
    }
  }
  return c.r;
}

CheckResult check_packing_radius_collision(const SweepConfig& config) {
  Check c("packing-radius-collision");
  // Claim under test: around some pair realizing the order distance, balls of
  // the formula radius plus the minimum weight already meet. Scanned in
  // aggregate across the whole sweep rather than stopping at the first miss.
  std::uint64_t failures = 0;
  std::string first;
  for (auto [q, n] : qn_pairs({2, 3, 4, 5, 7, 8, 9}, 625)) {
    Field f = Field::of_order(q);
    std::mt19937 rng = rng_for(config, c.r.id + "-" + std::to_string(q) + "-" + std::to_string(n));
    std::vector<WeightTable> tables = weight_family(f, config.heavy_random_weights, rng);
    for (unsigned i = 0; i < config.random_codes; ++i) {
      ++c.r.cases;
      std::uint64_t space_size = pow_u64(q, n);
      unsigned size = 2 + pick(rng, std::min<std::uint64_t>(4, space_size - 1));
      Code C = random_code(f, n, size, rng);
      const WeightTable& w = tables[pick(rng, tables.size())];
      WeightStats stats = weight_stats(w);
      MetricSpace space = chain_space(w, n);
      MinDistances md = min_distances(w, C);
      std::uint64_t radius = stats.max_weight * (md.order_distance - 1) + stats.min_nonzero_weight;
      bool collides = false;
      std::uint64_t nearest_meet = UINT64_MAX;
      for (std::size_t a = 0; a < C.size() && !collides; ++a)
        for (std::size_t b = a + 1; b < C.size() && !collides; ++b) {
          Vector diff = space.subtract(C.words()[a], C.words()[b]);
          unsigned top = 0;
          for (unsigned t = n; t-- > 0;)
            if (diff[t].index != 0) {
              top = t + 1;
              break;
            }
          if (top != md.order_distance) continue;
          std::uint64_t meet = pair_collision_radius(space, C.words()[a], C.words()[b]);
          nearest_meet = std::min(nearest_meet, meet);
          if (meet <= radius) collides = true;
        }
      if (!collides) {
        ++failures;
        if (first.empty()) {
          std::ostringstream os;
          os << describe_words(C.words()) << " " << describe_weight(w)
             << ": no realizing pair meets at radius " << radius
             << "; balls first meet at " << nearest_meet << " (true packing radius "
             << nearest_meet - 1 << ")";
          first = os.str();
        }
      }
    }
  }
  if (failures > 0)
    c.fail(std::to_string(failures) + " of " + std::to_string(c.r.cases) +
           " codes have no realizing pair colliding just above the formula radius; first: " +
           first);
  return c.r;
}

CheckResult check_packing_collision_linear(const SweepConfig& config) {
  Check c("packing-collision-linear-codes");
  std::mt19937 rng = rng_for(config, c.r.id);
  unsigned produced = 0;
  unsigned attempts = 0;
  while (produced < 150 && attempts < 20000) {
    ++attempts;
    const std::vector<unsigned> orders = {2, 3, 5, 7};
    unsigned q = orders[pick(rng, orders.size())];
    unsigned n = 1 + pick(rng, 3);
    if (pow_u64(q, n) > 625) continue;
    Field f = Field::of_order(q);
    unsigned k = 1 + pick(rng, n);
    Code C = random_linear_code(f, n, k, rng);
    if (C.size() < 2) continue;
    std::vector<WeightTable> tables = weight_family(f, 2, rng);
    const WeightTable& w = tables[pick(rng, tables.size())];
    WeightStats stats = weight_stats(w);
    MetricSpace space = chain_space(w, n);
    MinDistances md = min_distances(w, C);
    std::uint64_t radius = stats.max_weight * (md.order_distance - 1) + stats.min_nonzero_weight;
    // scaling closure gives a realizing pair whose top difference has minimum
    // weight, so linear codes must always collide here
    bool collides = false;
    for (std::size_t a = 0; a < C.size() && !collides; ++a)
      for (std::size_t b = a + 1; b < C.size() && !collides; ++b) {
        Vector diff = space.subtract(C.words()[a], C.words()[b]);
        unsigned top = 0;
        for (unsigned t = n; t-- > 0;)
          if (diff[t].index != 0) {
            top = t + 1;
            break;
          }
        if (top != md.order_distance) continue;
        if (pair_collision_radius(space, C.words()[a], C.words()[b]) <= radius) collides = true;
      }
    ++produced;
    ++c.r.cases;
    if (!collides) {
      c.fail("linear code with no collision just above the formula radius: " +
             describe_words(C.words()) + " " + describe_weight(w));
      return c.r;
    }
  }
  if (produced < 150) c.fail("could not generate enough linear codes");
  return c.r;
}

CheckResult check_prime_field_strict(const SweepConfig& config) {
  Check c("prime-field-strict-inequalities");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    Field f = Field::of_order(p);
    for (const WeightTable& w : weight_family(f, config.random_weights, rng)) {
      WeightStats stats = weight_stats(w);
      for (std::uint64_t S = stats.min_nonzero_weight + 1; S < stats.max_weight; ++S) {
        ++c.r.cases;
        std::uint64_t ball_factor = 1 + weight_interval(w, S - 1).preimage_count;
        if (ball_factor >= p) {
          c.fail("ball factor reaches the field order at S=" + std::to_string(S) + " " +
                 describe_weight(w));
          return c.r;
        }
        if (std::binary_search(stats.image.begin(), stats.image.end(),
                               static_cast<unsigned>(S))) {
          WFamilies fam = w_families(w, S);
          if (!fam.upper.empty() && fam.upper.front().size() >= p) {
            c.fail("upper family reaches the field order at S=" + std::to_string(S) + " " +
                   describe_weight(w));
            return c.r;
          }
        }
        if (S > stats.threshold) {
          WFamilies lower = w_families(w, S - 1);
          std::uint64_t total = 1 + weight_interval(w, stats.threshold - 1).preimage_count +
                                (lower.lower.empty() ? 0 : lower.lower.front().size());
          if (total >= p) {
            c.fail("combined factor reaches the field order at S=" + std::to_string(S) + " " +
                   describe_weight(w));
            return c.r;
          }
        }
      }
    }
  }
  return c.r;
}

CheckResult check_naive_weight_regression(const SweepConfig&) {
  Check c("naive-weight-regression");
  Field f = Field::of_order(7);
  WeightTable w = make_standard_weight(f, WeightKind::lee);
  MetricSpace space(f, 2, Poset::chain(2), w);
  Vector u{f.element(1), f.element(0)};
  Vector v{f.element(6), f.element(1)};
  Vector uv = space.add(u, v);
  c.r.cases = 3;
  if (space.naive_support_weight(u) != 1 || space.naive_support_weight(v) != 2 ||
      space.naive_support_weight(uv) != 4) {
    c.fail("support-sum variant values drifted from 1, 2, 4");
    return c.r;
  }
  if (space.naive_support_weight(uv) <=
      space.naive_support_weight(u) + space.naive_support_weight(v)) {
    c.fail("support-sum variant unexpectedly satisfies the triangle inequality at the witness");
    return c.r;
  }
  // the ideal-based weight passes the full triangle sweep on the same space
  std::vector<Vector> all;
  for_each_vector(f, 2, [&](const Vector& x) { all.push_back(x); });
  for (const Vector& x : all)
    for (const Vector& y : all) {
      ++c.r.cases;
      if (space.wp_weight(space.add(x, y)) > space.wp_weight(x) + space.wp_weight(y)) {
        c.fail("ideal-based weight violates the triangle inequality at " + describe_vector(x) +
               " + " + describe_vector(y));
        return c.r;
      }
    }
  return c.r;
}

CheckResult check_translation_product_bound(const SweepConfig& config) {
  Check c("translation-product-bound");
  std::mt19937 rng = rng_for(config, c.r.id);
  std::vector<Poset> small_posets[5];
  for (unsigned n = 2; n <= 4; ++n) small_posets[n] = enumerate_posets(n);
  unsigned produced = 0;
  unsigned attempts = 0;
  while (produced < 1000 && attempts < 200000) {
    ++attempts;
    const std::vector<unsigned> orders = {2, 3, 5, 7};
    unsigned q = orders[pick(rng, orders.size())];
    unsigned n = 2 + pick(rng, 3);
    if (pow_u64(q, n) > 625) continue;
    Field f = Field::of_order(q);
    WeightTable w = random_weight_table(f, 5, rng);
    bool use_chain = pick(rng, 10) < 7;
    Poset p = use_chain ? Poset::chain(n)
                        : small_posets[n][pick(rng, small_posets[n].size())];
    MetricSpace space(f, n, p, w);
    std::uint64_t space_size = pow_u64(q, n);
    // realized distance values determine the band split
    std::set<std::uint64_t> values;
    for_each_vector(f, n, [&](const Vector& x) {
      std::uint64_t d = space.wp_weight(x);
      if (d > 0) values.insert(d);
    });
    if (values.size() < 2) continue;
    std::vector<std::uint64_t> vals(values.begin(), values.end());
    std::uint64_t split = vals[pick(rng, vals.size() - 1)];  // never the max
    std::vector<std::uint64_t> order(space_size);
    for (std::uint64_t i = 0; i < space_size; ++i) order[i] = i;
    for (std::uint64_t i = space_size; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    std::vector<Vector> A, B;
    for (std::uint64_t rk : order) {
      Vector x = vector_from_rank(f, n, rk);
      bool fits_a = true;
      for (const Vector& a : A)
        if (space.wp_weight(space.subtract(x, a)) > split) {
          fits_a = false;
          break;
        }
      if (fits_a) A.push_back(x);
      bool fits_b = true;
      for (const Vector& b : B)
        if (space.wp_weight(space.subtract(x, b)) <= split) {
          fits_b = false;
          break;
        }
      if (fits_b) B.push_back(x);
    }
    if (A.size() < 2 || B.size() < 2) continue;
    ++produced;
    ++c.r.cases;
    ProductBoundCheck pb = distance_set_product_bound(space, A, B);
    if (!pb.disjoint) {
      c.fail("band construction produced overlapping distance sets");
      return c.r;
    }
    if (!pb.bound_holds) {
      c.fail("product " + std::to_string(pb.product) + " exceeds space size " +
             std::to_string(pb.space_size) + " at q=" + std::to_string(q) +
             " n=" + std::to_string(n) + (use_chain ? " (chain)" : " (non-chain)"));
      return c.r;
    }
  }
  if (produced < 1000) c.fail("could not generate 1000 disjoint-band instances");
  return c.r;
}

CheckResult check_equality_hunt(const SweepConfig&) {
  Check c("equality-hunt");
  EqualityHuntResult res = equality_hunt({4, 8, 9}, 4);
  c.r.cases = res.levels_checked;
  if (!res.all_verified) {
    for (const EqualityInstance& inst : res.instances)
      if (!inst.code_diameter_perfect) {
        std::ostringstream os;
        os << "criterion equality at q=" << inst.q << " S=" << inst.S
           << " but the constructed code is not diameter perfect (w nonzero values:";
        for (unsigned v : inst.weight_values) os << " " << v;
        os << ")";
        c.fail(os.str());
        return c.r;
      }
  }
  std::ostringstream os;
  if (res.instances.empty()) {
    os << "no equality instances found (scanned " << res.tables_scanned << " tables, "
       << res.valid_tables << " valid)";
  } else {
    os << res.instances.size() << " equality instances across " << res.valid_tables
       << " valid tables; every one admits a diameter-perfect code";
  }
  c.r.detail = os.str();
  return c.r;
}

CheckResult check_singleton_bound(const SweepConfig& config) {
  Check c("singleton-bound");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (auto [q, n] : qn_pairs({2, 3, 5, 7}, 625)) {
    Field f = Field::of_order(q);
    std::vector<WeightTable> tables = weight_family(f, 2, rng);
    for (unsigned i = 0; i < 50; ++i) {
      ++c.r.cases;
      std::uint64_t space = pow_u64(q, n);
      unsigned size = 2 + pick(rng, std::min<std::uint64_t>(8, space - 1));
      Code C = random_code(f, n, size, rng);
      SingletonCheck sc = singleton_check(tables[pick(rng, tables.size())], C);
      if (C.size() > sc.bound) {
        c.fail("bound exceeded at q=" + std::to_string(q) + " n=" + std::to_string(n));
        return c.r;
      }
    }
  }
  return c.r;
}

CheckResult check_power_of_q(const SweepConfig& config) {
  Check c("power-of-q-classification");
  std::mt19937 rng = rng_for(config, c.r.id);
  auto assert_agreement = [&](const WeightTable& w, const Code& C) {
    ++c.r.cases;
    PowerOfQClassification pc = power_of_q_classification(w, C);
    if (pc.mds != pc.diameter_perfect)
      c.fail("verdicts split for a size-q^k code: " + describe_words(C.words()) + " " +
             describe_weight(w));
  };
  for (unsigned q : {2u, 3u, 5u}) {
    Field f = Field::of_order(q);
    std::vector<WeightTable> tables = weight_family(f, 3, rng);
    for (unsigned n = 1; n <= 3; ++n) {
      for (unsigned d = 1; d <= n; ++d)
        for (const WeightTable& w : tables) {
          assert_agreement(w, construct_mds(f, n, d));
          if (!c.ok()) return c.r;
        }
      for (unsigned k = 1; k <= n; ++k)
        for (unsigned i = 0; i < 10; ++i) {
          Code C = random_linear_code(f, n, k, rng);
          if (C.size() < 2) continue;
          assert_agreement(tables[pick(rng, tables.size())], C);
          if (!c.ok()) return c.r;
          std::uint64_t want = pow_u64(q, k);
          if (want >= 2 && want < pow_u64(q, n)) {
            assert_agreement(tables[pick(rng, tables.size())],
                             random_code(f, n, static_cast<unsigned>(want), rng));
            if (!c.ok()) return c.r;
          }
        }
    }
  }
  return c.r;
}

CheckResult check_diameter_perfect_consistency(const SweepConfig& config) {
  Check c("diameter-perfect-consistency");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (auto [q, n] : qn_pairs({2, 3, 4, 5, 7, 8, 9}, 625)) {
    Field f = Field::of_order(q);
    std::vector<WeightTable> tables = weight_family(f, config.heavy_random_weights, rng);
    for (unsigned i = 0; i < 100; ++i) {
      ++c.r.cases;
      std::uint64_t space = pow_u64(q, n);
      unsigned size = 2 + pick(rng, std::min<std::uint64_t>(6, space - 1));
      Code C = random_code(f, n, size, rng);
      const WeightTable& w = tables[pick(rng, tables.size())];
      WeightStats stats = weight_stats(w);
      MinDistances md = min_distances(w, C);
      DiameterPerfection dp = is_diameter_perfect(w, C);
      if (md.pair_weight == stats.min_nonzero_weight) {
        // distance anchored at the minimum weight: perfection reduces to the
        // Singleton bound
        if (dp.diameter_perfect != singleton_check(w, C).mds) {
          c.fail("minimum-anchored code splits the verdicts: " + describe_words(C.words()) + " " +
                 describe_weight(w));
          return c.r;
        }
      } else if (md.pair_weight < stats.max_weight) {
        if (dp.diameter_perfect && !threshold_criterion(w, md.pair_weight).admits_perfect) {
          c.fail("diameter-perfect code at a level the criterion rejects: " +
                 describe_words(C.words()) + " " + describe_weight(w));
          return c.r;
        }
      }
    }
  }
  return c.r;
}

CheckResult check_threshold_code_validity(const SweepConfig& config) {
  Check c("threshold-code-validity");
  std::mt19937 rng = rng_for(config, c.r.id);
  for (unsigned q : {4u, 5u, 7u, 8u, 9u}) {
    Field f = Field::of_order(q);
    for (const WeightTable& w : weight_family(f, config.heavy_random_weights, rng)) {
      WeightStats stats = weight_stats(w);
      for (unsigned S : stats.image) {
        if (S <= stats.min_nonzero_weight || S >= stats.max_weight) continue;
        ThresholdCriterion crit = threshold_criterion(w, S);
        unsigned max_n = q <= 5 ? 3 : 2;
        for (unsigned n = 2; n <= max_n; ++n)
          for (unsigned R = 1; R <= n; ++R) {
            ++c.r.cases;
            Code C = construct_threshold_code(w, n, S, R);
            if (C.size() != pow_u64(q, n - R) * crit.upper_family_size) {
              c.fail("size drifted at S=" + std::to_string(S) + " R=" + std::to_string(R) + " " +
                     describe_weight(w));
              return c.r;
            }
            bool dp = is_diameter_perfect(w, C).diameter_perfect;
            if (dp != crit.admits_perfect) {
              c.fail("perfection disagrees with the criterion at S=" + std::to_string(S) +
                     " R=" + std::to_string(R) + " n=" + std::to_string(n) + " " +
                     describe_weight(w));
              return c.r;
            }
          }
      }
    }
  }
  return c.r;
}

using CheckFn = CheckResult (*)(const SweepConfig&);

struct Entry {
  const char* id;
  CheckFn fn;
  unsigned criterion;  // 0: not tied to an acceptance criterion
};

constexpr Entry kChecks[] = {
    {"field-axioms", check_field_axioms, 0},
    {"weight-validation", check_weight_validation, 0},
    {"chain-weight-agreement", check_chain_weight_agreement, 0},
    {"floor-weight-properties", check_floor_weight_properties, 0},
    {"radius-normalization", check_radius_normalization, 0},
    {"ball-size-formula", check_ball_size_formula, 1},
    {"anticode-size-closed-form", check_anticode_size_closed_form, 2},
    {"anticode-classification", check_anticode_classification, 3},
    {"ball-optimality-equivalence", check_ball_optimality_equivalence, 0},
    {"subspace-ball-structure", check_subspace_ball_structure, 0},
    {"w-family-structure", check_w_family_structure, 0},
    {"anticode-build-validity", check_anticode_build_validity, 0},
    {"ultrametric-triple-scan", check_ultrametric_triple_scan, 4},
    {"archimedean-ball-excess", check_archimedean_ball_excess, 4},
    {"non-chain-ball-excess", check_non_chain_ball_excess, 4},
    {"non-archimedean-ball-diameters", check_non_archimedean_ball_diameters, 4},
    {"mds-iff-perfect", check_mds_iff_perfect, 5},
    {"mds-diameter-perfect", check_mds_diameter_perfect, 5},
    {"random-non-mds-strict", check_random_non_mds_strict, 5},
    {"min-distance-structure", check_min_distance_structure, 6},
    {"packing-radius-disjoint", check_packing_radius_disjoint, 6},
    {"packing-radius-collision", check_packing_radius_collision, 6},
    {"packing-collision-linear-codes", check_packing_collision_linear, 0},
    {"prime-field-strict-inequalities", check_prime_field_strict, 7},
    {"naive-weight-regression", check_naive_weight_regression, 8},
    {"translation-product-bound", check_translation_product_bound, 9},
    {"equality-hunt", check_equality_hunt, 10},
    {"singleton-bound", check_singleton_bound, 0},
    {"power-of-q-classification", check_power_of_q, 0},
    {"diameter-perfect-consistency", check_diameter_perfect_consistency, 0},
    {"threshold-code-validity", check_threshold_code_validity, 0},
};

}  // namespace

EqualityHuntResult equality_hunt(const std::vector<unsigned>& orders, unsigned max_value) {
  EqualityHuntResult out;
  for (unsigned q : orders) {
    Field f = Field::of_order(q);
    std::vector<std::vector<unsigned>> classes;  // negation orbits of nonzero elements
    std::vector<int> cls(q, -1);
    for (unsigned a = 1; a < q; ++a) {
      if (cls[a] >= 0) continue;
      unsigned na = f.neg(f.element(a)).index;
      cls[a] = static_cast<int>(classes.size());
      if (na != a) cls[na] = static_cast<int>(classes.size());
      if (na != a)
        classes.push_back({a, na});
      else
        classes.push_back({a});
    }
    std::vector<unsigned> assign(classes.size(), 1);
    while (true) {
      ++out.tables_scanned;
      std::vector<unsigned> values(q, 0);
      for (std::size_t i = 0; i < classes.size(); ++i)
        for (unsigned a : classes[i]) values[a] = assign[i];
      WeightTable w(f, values);
      if (is_valid_weight(w)) {
        ++out.valid_tables;
        WeightStats stats = weight_stats(w);
        for (unsigned S : stats.image) {
          if (S <= stats.min_nonzero_weight || S >= stats.max_weight) continue;
          ++out.levels_checked;
          ThresholdCriterion crit = threshold_criterion(w, S);
          if (!crit.admits_perfect) continue;
          EqualityInstance inst;
          inst.q = q;
          inst.weight_values.assign(values.begin() + 1, values.end());
          inst.S = S;
          inst.product = crit.product;
          Code C = construct_threshold_code(w, 2, S, 1);
          inst.code_diameter_perfect = is_diameter_perfect(w, C).diameter_perfect;
          out.all_verified = out.all_verified && inst.code_diameter_perfect;
          out.instances.push_back(std::move(inst));
        }
      }
      std::size_t i = 0;
      while (i < assign.size() && assign[i] == max_value) {
        assign[i] = 1;
        ++i;
      }
      if (i == assign.size()) break;
      ++assign[i];
    }
  }
  return out;
}

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const Entry& e : kChecks) out.push_back(e.id);
  return out;
}

CheckResult run_check(const std::string& id, const SweepConfig& config) {
  for (const Entry& e : kChecks) {
    if (id != e.id) continue;
    try {
      return e.fn(config);
    } catch (const BudgetError& err) {
      CheckResult r;
      r.id = id;
      r.status = CheckStatus::skipped;
      r.detail = err.what();
      return r;
    } catch (const std::exception& err) {
      CheckResult r;
      r.id = id;
      r.status = CheckStatus::failed;
      r.detail = std::string("unexpected error: ") + err.what();
      return r;
    }
  }
  throw DomainError("unknown check id: " + id);
}

std::vector<CheckResult> run_verification_suite(const SweepConfig& config) {
  std::vector<CheckResult> out;
  for (const Entry& e : kChecks) out.push_back(run_check(e.id, config));
  return out;
}

std::vector<std::string> criterion_checks(unsigned criterion) {
  std::vector<std::string> out;
  for (const Entry& e : kChecks)
    if (e.criterion == criterion && criterion != 0) out.push_back(e.id);
  return out;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    default: return "skipped";
  }
}

}  // namespace chainmetric
