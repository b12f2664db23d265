#include <doctest.h>

#include <vector>

#include "chainmetric/anticode.hpp"
#include "chainmetric/codes.hpp"
#include "chainmetric/errors.hpp"
#include "chainmetric/field.hpp"
#include "chainmetric/metric.hpp"
#include "chainmetric/oracle.hpp"
#include "chainmetric/poset.hpp"
#include "chainmetric/weight.hpp"

using namespace chainmetric;

namespace {

MetricSpace lee_chain(unsigned q, unsigned n) {
  Field f = Field::make(q);
  return MetricSpace(f, n, Poset::chain(n), make_standard_weight(f, WeightKind::lee));
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("brute ball sizes back the closed form") {
  MetricSpace space = lee_chain(5, 2);
  Vector zero = to_vector(space.field(), {0, 0});
  for (std::uint64_t D = 0; D <= 5; ++D) {
    CHECK(brute_ball_size(space, zero, D) == ball_size(space.weight(), 2, D).size);
    CHECK(brute_ball_size(space, to_vector(space.field(), {3, 1}), D) ==
          ball_size(space.weight(), 2, D).size);
  }
}

TEST_CASE("the clique search respects its vertex budget") {
  CHECK(brute_a_star(lee_chain(5, 2), 2) == 5);
  CHECK_THROWS_AS(brute_a_star(lee_chain(7, 3), 2), BudgetError);
}

TEST_CASE("all maximum anticodes through zero are enumerated") {
  MetricSpace space = lee_chain(7, 1);
  BruteAnticodeResult res = brute_optimal_anticodes(space, 2);
  CHECK(res.a_star == 3);
  REQUIRE(res.maximum_sets.size() == 3);
  const Field& f = space.field();
  std::vector<std::vector<Vector>> expected{
      {to_vector(f, {0}), to_vector(f, {1}), to_vector(f, {2})},
      {to_vector(f, {0}), to_vector(f, {1}), to_vector(f, {6})},
      {to_vector(f, {0}), to_vector(f, {5}), to_vector(f, {6})}};
  CHECK(res.maximum_sets == expected);
}

TEST_CASE("brute minimum distance matches the closed form on a construction") {
  Field f = Field::make(5);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  MetricSpace space(f, 3, Poset::chain(3), lee);
  Code C = construct_mds(f, 3, 2);
  CHECK(brute_min_weighted_distance(space, C.words()) ==
        min_distances(lee, C).weighted_distance);
}

TEST_CASE("packing and covering radii of the repetition code") {
  Field f = Field::make(2);
  MetricSpace space(f, 3, Poset::chain(3), make_standard_weight(f, WeightKind::hamming));
  std::vector<Vector> words{to_vector(f, {0, 0, 0}), to_vector(f, {1, 1, 1})};
  CHECK(brute_packing_radius(space, words) == 2);
  CHECK(brute_covering_radius(space, words) == 2);
  CHECK(brute_covering_radius(space, {to_vector(f, {0, 0, 0})}) == 3);
  CHECK_THROWS_AS(brute_packing_radius(space, {words[0], words[0]}), ValidationError);
}

TEST_CASE("oracles run on arbitrary posets") {
  Field f = Field::make(2);
  MetricSpace flat(f, 2, Poset::antichain(2), make_standard_weight(f, WeightKind::hamming));
  Vector zero = to_vector(f, {0, 0});
  // Hamming ball of radius 1 in F_2^2.
  CHECK(brute_ball_size(flat, zero, 1) == 3);
  CHECK(brute_a_star(flat, 1) == 2);
}

}
