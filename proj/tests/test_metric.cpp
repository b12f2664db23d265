#include <doctest.h>

#include "chainmetric/errors.hpp"
#include "chainmetric/field.hpp"
#include "chainmetric/metric.hpp"
#include "chainmetric/poset.hpp"
#include "chainmetric/weight.hpp"

using namespace chainmetric;

namespace {

MetricSpace lee_chain(unsigned q, unsigned n) {
  Field f = Field::make(q);
  return MetricSpace(f, n, Poset::chain(n), make_standard_weight(f, WeightKind::lee));
}

}  // namespace

TEST_SUITE("metric") {

TEST_CASE("construction validates its pieces") {
  Field f = Field::make(5);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  CHECK_THROWS_AS(MetricSpace(f, 3, Poset::chain(2), lee), ValidationError);
  CHECK_THROWS_AS(MetricSpace(f, 2, Poset::chain(2), WeightTable(f, {0, 1, 5, 5, 1})),
                  ValidationError);
  CHECK_THROWS_AS(MetricSpace(Field::make(7), 2, Poset::chain(2), lee), ValidationError);
}

TEST_CASE("chain fast path agrees with the general evaluator") {
  MetricSpace space = lee_chain(5, 3);
  const Field& f = space.field();
  CHECK(space.chain());
  CHECK(space.max_weight() == 2);
  CHECK(space.chain_weight(to_vector(f, {0, 2, 1})) == 5);
  CHECK(space.wp_weight(to_vector(f, {0, 2, 1})) == 5);
  for_each_vector(f, 3, [&](const Vector& u) {
    CHECK(space.chain_weight(u) == space.wp_weight(u));
  });
}

TEST_CASE("the general evaluator charges maximals their own weight") {
  Field f = Field::make(5);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  MetricSpace flat(f, 3, Poset::antichain(3), lee);
  CHECK(flat.wp_weight(to_vector(f, {2, 1, 0})) == 3);
  CHECK_THROWS_AS(flat.chain_weight(to_vector(f, {2, 1, 0})), ContractError);

  MetricSpace vee(f, 3, Poset::from_covers(3, {{1, 3}, {2, 3}}), lee);
  // Support {1,3}: the ideal is everything, label 3 alone is maximal.
  CHECK(vee.wp_weight(to_vector(f, {1, 0, 1})) == 5);
  // Support {1,2}: both labels are maximal in their own ideal.
  CHECK(vee.wp_weight(to_vector(f, {1, 1, 0})) == 2);
}

TEST_CASE("distances are translation invariant") {
  MetricSpace space = lee_chain(5, 2);
  const Field& f = space.field();
  Vector u = to_vector(f, {1, 3});
  Vector v = to_vector(f, {4, 3});
  Vector t = to_vector(f, {2, 2});
  CHECK(space.chain_distance(u, v) == space.chain_weight(space.subtract(u, v)));
  CHECK(space.chain_distance(space.add(u, t), space.add(v, t)) == space.chain_distance(u, v));
  CHECK(space.wp_distance(u, v) == space.chain_distance(u, v));
}

TEST_CASE("the support-charging variant breaks the triangle inequality") {
  MetricSpace space = lee_chain(7, 2);
  const Field& f = space.field();
  Vector u = to_vector(f, {1, 0});
  Vector v = to_vector(f, {6, 1});
  Vector sum = space.add(u, v);
  CHECK(space.naive_support_weight(u) == 1);
  CHECK(space.naive_support_weight(v) == 2);
  CHECK(space.naive_support_weight(sum) == 4);
  // The corrected weight keeps the same vectors inside the triangle bound.
  CHECK(space.wp_weight(sum) <= space.wp_weight(u) + space.wp_weight(v));
}

TEST_CASE("chain plus non-archimedean weight is ultrametric") {
  Field f = Field::make(2);
  MetricSpace space(f, 2, Poset::chain(2), make_standard_weight(f, WeightKind::hamming));
  UltrametricCheck res = check_ultrametric(space);
  CHECK(res.is_ultrametric);
  CHECK(res.triples_scanned == 64);
  CHECK_FALSE(res.witness.has_value());
}

TEST_CASE("archimedean weights yield a witness triple") {
  MetricSpace space = lee_chain(5, 1);
  UltrametricCheck res = check_ultrametric(space);
  REQUIRE_FALSE(res.is_ultrametric);
  REQUIRE(res.witness.has_value());
  const auto& [x, y, z] = *res.witness;
  CHECK(space.wp_distance(x, y) >
        std::max(space.wp_distance(x, z), space.wp_distance(z, y)));
  CHECK(vector_rank(space.field(), x) == 0);
  CHECK(vector_rank(space.field(), y) == 2);
  CHECK(vector_rank(space.field(), z) == 1);
}

TEST_CASE("non-chain posets are scanned too") {
  Field f = Field::make(2);
  MetricSpace space(f, 2, Poset::antichain(2), make_standard_weight(f, WeightKind::hamming));
  UltrametricCheck res = check_ultrametric(space);
  REQUIRE_FALSE(res.is_ultrametric);
  REQUIRE(res.witness.has_value());
  const auto& [x, y, z] = *res.witness;
  CHECK(vector_rank(f, x) == 0);
  CHECK(vector_rank(f, y) == 3);
  CHECK(vector_rank(f, z) == 1);
}

TEST_CASE("the triple scan respects its budget") {
  MetricSpace space = lee_chain(5, 2);
  CHECK_THROWS_AS(check_ultrametric(space, 100), BudgetError);
}

}
