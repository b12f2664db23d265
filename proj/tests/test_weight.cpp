#include <doctest.h>

#include <random>
#include <vector>

#include "chainmetric/errors.hpp"
#include "chainmetric/field.hpp"
#include "chainmetric/weight.hpp"

using namespace chainmetric;

TEST_SUITE("weight") {

TEST_CASE("standard weights have the expected tables") {
  Field f5 = Field::make(5);
  CHECK(make_standard_weight(f5, WeightKind::hamming).values() ==
        std::vector<unsigned>{0, 1, 1, 1, 1});
  CHECK(make_standard_weight(f5, WeightKind::lee).values() ==
        std::vector<unsigned>{0, 1, 2, 2, 1});
  Field f7 = Field::make(7);
  CHECK(make_standard_weight(f7, WeightKind::lee).values() ==
        std::vector<unsigned>{0, 1, 2, 3, 3, 2, 1});
  CHECK_THROWS_AS(make_standard_weight(Field::of_order(4), WeightKind::lee), DomainError);
}

TEST_CASE("validation names the broken axiom") {
  Field f = Field::make(5);
  auto axioms_of = [](const std::vector<WeightViolation>& vs) {
    std::vector<WeightAxiom> out;
    for (const auto& v : vs) out.push_back(v.axiom);
    return out;
  };

  auto zero_bad = axioms_of(validate_weight(WeightTable(f, {1, 1, 2, 2, 1})));
  REQUIRE_FALSE(zero_bad.empty());
  CHECK(zero_bad.front() == WeightAxiom::zero_iff_zero);

  auto sym_bad = axioms_of(validate_weight(WeightTable(f, {0, 1, 2, 2, 2})));
  REQUIRE_FALSE(sym_bad.empty());
  CHECK(sym_bad.front() == WeightAxiom::symmetry);

  auto tri_bad = axioms_of(validate_weight(WeightTable(f, {0, 1, 5, 5, 1})));
  REQUIRE_FALSE(tri_bad.empty());
  CHECK(tri_bad.front() == WeightAxiom::triangle);

  CHECK(is_valid_weight(make_standard_weight(f, WeightKind::lee)));
  CHECK_FALSE(is_valid_weight(WeightTable(f, {0, 1, 5, 5, 1})));
  CHECK_THROWS_AS(require_valid_weight(WeightTable(f, {0, 1, 5, 5, 1})), ValidationError);
  CHECK_THROWS_AS(WeightTable(f, {0, 1, 1}), ValidationError);
}

TEST_CASE("stats derive extremes, image, and the threshold") {
  Field f5 = Field::make(5);
  WeightStats lee = weight_stats(make_standard_weight(f5, WeightKind::lee));
  CHECK(lee.max_weight == 2);
  CHECK(lee.min_nonzero_weight == 1);
  CHECK(lee.image == std::vector<unsigned>{0, 1, 2});
  // 1 + 1 = 2 jumps above max{1, 1}, so the threshold sits at the bottom.
  CHECK(lee.threshold == 1);
  CHECK_FALSE(lee.non_archimedean);

  WeightStats ham = weight_stats(make_standard_weight(f5, WeightKind::hamming));
  CHECK(ham.max_weight == 1);
  CHECK(ham.threshold == 1);
  CHECK(ham.non_archimedean);
}

TEST_CASE("intervals count preimages of low weights") {
  Field f7 = Field::make(7);
  WeightTable lee = make_standard_weight(f7, WeightKind::lee);
  WeightInterval i2 = weight_interval(lee, 2);
  CHECK(i2.values == std::vector<unsigned>{1, 2});
  CHECK(i2.preimage_count == 4);
  CHECK(weight_interval(lee, 0).preimage_count == 0);
  CHECK(weight_interval(lee, 10).preimage_count == 6);
}

TEST_CASE("floor weight is the largest realizable value strictly below") {
  Field f5 = Field::make(5);
  WeightTable lee = make_standard_weight(f5, WeightKind::lee);
  CHECK(floor_weight(lee, 3, 3) == 2);
  CHECK(floor_weight(lee, 1, 10) == 2);
  CHECK(floor_weight(lee, 2, 5) == 4);
  CHECK(floor_weight(lee, 3, 1) == 0);
  CHECK_THROWS_AS(floor_weight(lee, 3, 0), DomainError);
}

TEST_CASE("realizable radii enumerate the chain weight image") {
  Field f5 = Field::make(5);
  WeightTable lee = make_standard_weight(f5, WeightKind::lee);
  CHECK(realizable_radii(lee, 2) == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
  Field f2 = Field::make(2);
  WeightTable ham = make_standard_weight(f2, WeightKind::hamming);
  CHECK(realizable_radii(ham, 3) == std::vector<std::uint64_t>{0, 1, 2, 3});
}

TEST_CASE("random tables are valid and reproducible") {
  Field f = Field::make(7);
  std::mt19937 a(99), b(99);
  WeightTable wa = random_weight_table(f, 6, a);
  WeightTable wb = random_weight_table(f, 6, b);
  CHECK(wa.values() == wb.values());
  CHECK(is_valid_weight(wa));
}

}
