#include <doctest.h>

#include <vector>

#include "chainmetric/codes.hpp"
#include "chainmetric/errors.hpp"
#include "chainmetric/field.hpp"
#include "chainmetric/weight.hpp"

using namespace chainmetric;

TEST_SUITE("codes") {

TEST_CASE("codes validate and sort their words") {
  Field f = Field::make(2);
  std::vector<Vector> words{to_vector(f, {1, 1}), to_vector(f, {0, 0})};
  Code C(f, 2, words);
  CHECK(C.size() == 2);
  CHECK(C.words().front() == to_vector(f, {0, 0}));
  CHECK_THROWS_AS(Code(f, 2, {to_vector(f, {0, 0}), to_vector(f, {0, 0})}), ValidationError);
  CHECK_THROWS_AS(Code(f, 2, {to_vector(f, {0})}), ValidationError);
}

TEST_CASE("minimum distances decompose into pair weight and rank") {
  Field f = Field::make(5);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  Code C = construct_mds(f, 3, 2);
  MinDistances d = min_distances(lee, C);
  CHECK(d.order_distance == 2);
  CHECK(d.pair_weight == 1);
  CHECK(d.weighted_distance == 3);
  CHECK_THROWS_AS(min_distances(lee, Code(f, 2, {to_vector(f, {0, 0})})), DomainError);
}

TEST_CASE("the zero-prefix construction meets the Singleton bound") {
  Field f = Field::make(5);
  Code C = construct_mds(f, 4, 3);
  CHECK(C.size() == 25);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  SingletonCheck s = singleton_check(lee, C);
  CHECK(s.order_distance == 3);
  CHECK(s.bound == 25);
  CHECK(s.mds);
  CHECK_THROWS_AS(construct_mds(f, 3, 4), ValidationError);
  CHECK_THROWS_AS(construct_mds(f, 3, 0), ValidationError);
}

TEST_CASE("packing radius formula and enumeration agree on a repetition code") {
  Field f = Field::make(2);
  WeightTable ham = make_standard_weight(f, WeightKind::hamming);
  Code C(f, 3, {to_vector(f, {0, 0, 0}), to_vector(f, {1, 1, 1})});
  CHECK(packing_radius_formula(ham, C) == 2);
  PackingRadiusCheck p = verify_packing_radius(ham, C);
  CHECK(p.formula_radius == 2);
  CHECK(p.enumerated_radius == 2);
  CHECK(p.disjoint_at_radius);
  CHECK(p.collision_just_above);
}

TEST_CASE("perfection pairs packing against covering") {
  Field f = Field::make(2);
  WeightTable ham = make_standard_weight(f, WeightKind::hamming);
  Code C(f, 3, {to_vector(f, {0, 0, 0}), to_vector(f, {1, 1, 1})});
  PerfectionCheck res = is_perfect(ham, C);
  CHECK(res.packing_radius == 2);
  CHECK(res.covering_radius == 2);
  CHECK(res.perfect);

  Code sparse(f, 3, {to_vector(f, {0, 0, 0}), to_vector(f, {1, 1, 0})});
  PerfectionCheck gapped = is_perfect(ham, sparse);
  CHECK(gapped.covering_radius == 3);
  CHECK_FALSE(gapped.perfect);
}

TEST_CASE("diameter perfection certifies the repetition code") {
  Field f = Field::make(2);
  WeightTable ham = make_standard_weight(f, WeightKind::hamming);
  Code C = construct_mds(f, 3, 2);
  DiameterPerfection d = is_diameter_perfect(ham, C);
  CHECK(d.weighted_distance == 2);
  CHECK(d.floor_radius == 1);
  CHECK(d.anticode_size == 2);
  CHECK(d.product == 8);
  CHECK(d.space_size == 8);
  CHECK(d.bound_holds);
  CHECK(d.diameter_perfect);
}

TEST_CASE("power-of-q sizes make the two verdicts agree") {
  Field f = Field::make(3);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  Code C = construct_mds(f, 3, 2);
  PowerOfQClassification cls = power_of_q_classification(lee, C);
  CHECK(cls.k == 2);
  CHECK(cls.mds);
  CHECK(cls.diameter_perfect);

  Field f2 = Field::make(2);
  Code odd(f2, 2, {to_vector(f2, {0, 0}), to_vector(f2, {1, 0}), to_vector(f2, {1, 1})});
  CHECK_THROWS_AS(power_of_q_classification(make_standard_weight(f2, WeightKind::hamming), odd),
                  DomainError);
}

TEST_CASE("the level criterion reproduces the frozen lee numbers") {
  Field f = Field::make(7);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  ThresholdCriterion c = threshold_criterion(lee, 2);
  CHECK(c.S == 2);
  CHECK(c.above_threshold);
  CHECK(c.anticode_factor == 2);
  CHECK(c.upper_family_size == 3);
  CHECK(c.product == 6);
  CHECK(c.q == 7);
  CHECK(c.holds);
  CHECK_FALSE(c.admits_perfect);
  CHECK_THROWS_AS(threshold_criterion(lee, 1), DomainError);
  CHECK_THROWS_AS(threshold_criterion(lee, 3), DomainError);
}

TEST_CASE("level-anchored codes have the advertised size and distance") {
  Field f = Field::make(7);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);

  Code a = construct_threshold_code(lee, 2, 2, 1);
  CHECK(a.size() == 21);
  CHECK(min_distances(lee, a).weighted_distance == 2);

  Code b = construct_threshold_code(lee, 3, 2, 2);
  CHECK(b.size() == 21);
  CHECK(min_distances(lee, b).weighted_distance == 5);

  CHECK_THROWS_AS(construct_threshold_code(lee, 2, 2, 3), ValidationError);
}

TEST_CASE("full reports carry the enumerated checks at desk scale") {
  Field f = Field::make(2);
  WeightTable ham = make_standard_weight(f, WeightKind::hamming);
  Code C = construct_mds(f, 3, 3);
  CodeReport report = analyze_code(ham, C);
  CHECK(report.size == 2);
  CHECK(report.distances.order_distance == 3);
  CHECK(report.formula_packing_radius == 2);
  CHECK(report.singleton.mds);
  CHECK(report.diameter.diameter_perfect);
  REQUIRE(report.packing.has_value());
  CHECK(report.packing->disjoint_at_radius);
  REQUIRE(report.perfection.has_value());
  CHECK(report.perfection->perfect);

  // A space beyond the budget drops the enumerated parts but keeps the forms.
  Code big = construct_mds(Field::make(5), 12, 12);
  CodeReport light = analyze_code(make_standard_weight(Field::make(5), WeightKind::lee), big,
                                  100000);
  CHECK_FALSE(light.packing.has_value());
  CHECK_FALSE(light.perfection.has_value());
  CHECK(light.singleton.mds);
}

}
