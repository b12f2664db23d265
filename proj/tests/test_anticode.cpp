#include <doctest.h>

#include <algorithm>
#include <vector>

#include "chainmetric/anticode.hpp"
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

TEST_SUITE("anticode") {

TEST_CASE("radii normalize onto S + R * max_weight") {
  Field f = Field::make(5);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  auto dec = [&](std::uint64_t r) { return normalize_radius(lee, r); };
  CHECK(dec(0).S == 0);
  CHECK(dec(0).R == 0);
  CHECK(dec(1).S == 1);
  CHECK(dec(1).R == 0);
  CHECK(dec(2).S == 0);
  CHECK(dec(2).R == 1);
  CHECK(dec(3).S == 1);
  CHECK(dec(3).R == 1);
  CHECK(dec(3).normalized == 3);
  CHECK(dec(4).R == 2);
  CHECK(dec(5).S == 1);
  CHECK(dec(5).R == 2);
}

TEST_CASE("ball sizes follow the closed form") {
  Field f5 = Field::make(5);
  WeightTable lee = make_standard_weight(f5, WeightKind::lee);
  BallSizeResult b = ball_size(lee, 2, 3);
  CHECK(b.size == 15);
  CHECK(b.radius.S == 1);
  CHECK(b.radius.R == 1);
  CHECK_FALSE(b.whole_space);

  Field f2 = Field::make(2);
  WeightTable ham = make_standard_weight(f2, WeightKind::hamming);
  CHECK(ball_size(ham, 3, 2).size == 4);

  // Largest vector weight in F_5^2 under lee is 4.
  CHECK(ball_size(lee, 2, 4).size == 25);
  CHECK_FALSE(ball_size(lee, 2, 4).clamped);
  CHECK(ball_size(lee, 2, 5).size == 25);
  CHECK(ball_size(lee, 2, 5).clamped);
  CHECK(ball_size(lee, 2, 10).whole_space);
}

TEST_CASE("enumerated balls match the closed form and translate") {
  MetricSpace space = lee_chain(5, 2);
  const Field& f = space.field();
  Vector zero = to_vector(f, {0, 0});
  Vector center = to_vector(f, {1, 2});
  for (std::uint64_t D = 0; D <= 5; ++D) {
    std::vector<Vector> around_zero = ball(space, zero, D);
    CHECK(around_zero.size() == ball_size(space.weight(), 2, D).size);
    CHECK(around_zero.size() == ball(space, center, D).size());
    CHECK(std::is_sorted(around_zero.begin(), around_zero.end(),
                         [&](const Vector& a, const Vector& b) {
                           return vector_rank(f, a) < vector_rank(f, b);
                         }));
  }
}

TEST_CASE("balls on non-chain posets go through the general evaluator") {
  Field f = Field::make(3);
  MetricSpace flat(f, 2, Poset::antichain(2), make_standard_weight(f, WeightKind::hamming));
  CHECK(ball(flat, to_vector(f, {0, 0}), 1).size() == 5);
}

TEST_CASE("diameter is the largest pairwise distance") {
  MetricSpace space = lee_chain(5, 2);
  const Field& f = space.field();
  CHECK(diameter(space, {to_vector(f, {0, 0})}) == 0);
  CHECK(diameter(space, {to_vector(f, {0, 0}), to_vector(f, {1, 0})}) == 1);
  CHECK_THROWS_AS(diameter(space, {}), DomainError);
}

TEST_CASE("disjoint distance sets force the product bound") {
  Field f = Field::make(2);
  MetricSpace space(f, 2, Poset::chain(2), make_standard_weight(f, WeightKind::hamming));
  std::vector<Vector> A{to_vector(f, {0, 0}), to_vector(f, {1, 0})};
  std::vector<Vector> B{to_vector(f, {0, 0}), to_vector(f, {0, 1})};
  ProductBoundCheck res = distance_set_product_bound(space, A, B);
  CHECK(res.disjoint);
  CHECK(res.bound_holds);
  CHECK(res.product == 4);
  CHECK(res.space_size == 4);
  CHECK_FALSE(distance_set_product_bound(space, A, A).disjoint);
}

TEST_CASE("both extremal families at S = 2 over F_7 with lee weights") {
  Field f = Field::make(7);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  WFamilies fam = w_families(lee, 2);
  REQUIRE(fam.lower_defined);
  REQUIRE(fam.upper_defined);
  // Elements of weight 1 or 2 pairwise within difference-weight 2: three
  // maximum pairs.
  REQUIRE(fam.lower.size() == 3);
  for (const auto& K : fam.lower) CHECK(K.size() == 2);
  CHECK(fam.lower.front() == std::vector<FieldElement>{f.element(1), f.element(2)});
  // Pairwise difference weight >= 2 with a tight pair: the seven rotations of
  // {0, 2, 4}.
  REQUIRE(fam.upper.size() == 7);
  for (const auto& Y : fam.upper) CHECK(Y.size() == 3);
  CHECK(fam.upper.front() ==
        std::vector<FieldElement>{f.element(0), f.element(2), f.element(4)});
}

TEST_CASE("family levels outside every definition reject") {
  Field f = Field::make(5);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  // Threshold and min weight are both 1, max is 2, so level 4 defines nothing.
  CHECK_THROWS_AS(w_families(lee, 4), DomainError);
}

TEST_CASE("optimal anticode sizes hit their frozen values") {
  Field f5 = Field::make(5);
  WeightTable lee5 = make_standard_weight(f5, WeightKind::lee);
  AnticodeSize a = optimal_anticode_size(lee5, 1, 1);
  CHECK(a.a_star == 2);
  CHECK(a.branch == AnticodeBranch::at_or_above_threshold);

  Field f7 = Field::make(7);
  WeightTable lee7 = make_standard_weight(f7, WeightKind::lee);
  CHECK(optimal_anticode_size(lee7, 1, 2).a_star == 3);

  Field f2 = Field::make(2);
  WeightTable ham = make_standard_weight(f2, WeightKind::hamming);
  AnticodeSize h = optimal_anticode_size(ham, 3, 2);
  CHECK(h.a_star == 4);
  CHECK(h.branch == AnticodeBranch::below_threshold);
}

TEST_CASE("closed-form anticode sizes match the exact clique search") {
  MetricSpace space = lee_chain(5, 2);
  for (std::uint64_t D = 1; D <= 4; ++D)
    CHECK(optimal_anticode_size(space.weight(), 2, D).a_star == brute_a_star(space, D));
}

TEST_CASE("constructed anticodes have the right size and diameter") {
  Field f = Field::make(7);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  MetricSpace space(f, 2, Poset::chain(2), lee);
  Vector zero = to_vector(f, {0, 0});

  std::vector<Vector> star = build_optimal_anticode(lee, 2, zero, 2);
  CHECK(star.size() == 3);
  CHECK(diameter(space, star) <= 2);
  AnticodeCheck checked = is_optimal_anticode(star, lee, 2, 2);
  CHECK(checked.optimal);
  CHECK(checked.form == AnticodeForm::translated_star);

  std::vector<Vector> with_k =
      build_optimal_anticode(lee, 2, zero, 2,
                             std::vector<FieldElement>{f.element(1), f.element(6)});
  CHECK(is_optimal_anticode(with_k, lee, 2, 2).optimal);
  CHECK_THROWS_AS(build_optimal_anticode(lee, 2, zero, 2,
                                         std::vector<FieldElement>{f.element(1), f.element(5)}),
                  ValidationError);
}

TEST_CASE("below the threshold the construction is a ball") {
  Field f = Field::make(2);
  WeightTable ham = make_standard_weight(f, WeightKind::hamming);
  MetricSpace space(f, 3, Poset::chain(3), ham);
  Vector zero = to_vector(f, {0, 0, 0});
  std::vector<Vector> A = build_optimal_anticode(ham, 3, zero, 2);
  CHECK(A.size() == 4);
  AnticodeCheck checked = is_optimal_anticode(A, ham, 3, 2);
  CHECK(checked.optimal);
  CHECK(checked.form == AnticodeForm::ball);
  // K belongs to the other branch.
  CHECK_THROWS_AS(build_optimal_anticode(ham, 3, zero, 2,
                                         std::vector<FieldElement>{f.element(1)}),
                  ValidationError);
}

TEST_CASE("non-optimal sets are rejected with their defect") {
  Field f = Field::make(7);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  Vector zero = to_vector(f, {0, 0});
  std::vector<Vector> small{zero, to_vector(f, {1, 0})};
  AnticodeCheck res = is_optimal_anticode(small, lee, 2, 2);
  CHECK_FALSE(res.optimal);
  CHECK(res.a_star == 3);
  std::vector<Vector> wide{zero, to_vector(f, {0, 1})};
  CHECK_FALSE(is_optimal_anticode(wide, lee, 2, 2).optimal);
}

}
