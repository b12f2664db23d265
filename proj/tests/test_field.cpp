#include <doctest.h>

#include <vector>

#include "chainmetric/errors.hpp"
#include "chainmetric/field.hpp"

using namespace chainmetric;

TEST_SUITE("field") {

TEST_CASE("parse accepts plain, caret, and prefixed forms") {
  Field a = Field::parse("9");
  CHECK(a.p() == 3);
  CHECK(a.k() == 2);
  CHECK(a.q() == 9);
  Field b = Field::parse("3^2");
  CHECK(b == a);
  Field c = Field::parse("q=5");
  CHECK(c.q() == 5);
  CHECK_THROWS_AS(Field::parse("six"), ValidationError);
  CHECK_THROWS_AS(Field::of_order(6), ValidationError);
  CHECK_THROWS_AS(Field::of_order(1), ValidationError);
}

TEST_CASE("prime field arithmetic matches modular arithmetic") {
  Field f = Field::make(7);
  CHECK(f.add(f.element(3), f.element(5)) == f.element(1));
  CHECK(f.mul(f.element(3), f.element(5)) == f.element(1));
  CHECK(f.neg(f.element(3)) == f.element(4));
  CHECK(f.inv(f.element(3)) == f.element(5));
  CHECK(f.sub(f.element(2), f.element(5)) == f.element(4));
  CHECK_THROWS_AS(f.inv(f.zero()), DomainError);
  CHECK(f.reduction_polynomial_text().empty());
}

TEST_CASE("F4 is built from x^2 + x + 1") {
  Field f = Field::of_order(4);
  CHECK(f.p() == 2);
  CHECK(f.k() == 2);
  CHECK(f.reduction_polynomial_text() == "x^2 + x + 1");
  // Indices pack coefficients base p, constant term first: 2 = x, 3 = x + 1.
  CHECK(f.add(f.element(2), f.element(3)) == f.element(1));
  CHECK(f.mul(f.element(2), f.element(2)) == f.element(3));
  CHECK(f.mul(f.element(2), f.element(3)) == f.element(1));
  CHECK(f.inv(f.element(2)) == f.element(3));
}

TEST_CASE("every nonzero element of F9 has a working inverse") {
  Field f = Field::of_order(9);
  for (unsigned i = 1; i < 9; ++i) {
    FieldElement a = f.element(i);
    CHECK(f.mul(a, f.inv(a)) == f.one());
  }
}

TEST_CASE("element indices are bounds checked") {
  Field f = Field::make(5);
  CHECK_THROWS_AS(f.element(5), ValidationError);
}

TEST_CASE("vector ranks use coordinate 1 as the least significant digit") {
  Field f = Field::make(5);
  Vector v = vector_from_rank(f, 2, 7);
  CHECK(v == to_vector(f, {2, 1}));
  CHECK(vector_rank(f, v) == 7);
  for (std::uint64_t r : {0ull, 24ull, 124ull})
    CHECK(vector_rank(f, vector_from_rank(f, 3, r)) == r);
}

TEST_CASE("for_each_vector walks in rank order") {
  Field f = Field::make(2);
  std::vector<Vector> seen;
  for_each_vector(f, 2, [&](const Vector& v) { seen.push_back(v); });
  REQUIRE(seen.size() == 4);
  CHECK(seen[0] == to_vector(f, {0, 0}));
  CHECK(seen[1] == to_vector(f, {1, 0}));
  CHECK(seen[2] == to_vector(f, {0, 1}));
  CHECK(seen[3] == to_vector(f, {1, 1}));
}

TEST_CASE("space size respects the enumeration budget") {
  Field f = Field::make(5);
  CHECK(space_size_checked(f, 3) == 125);
  CHECK_THROWS_AS(space_size_checked(f, 10, 1000), BudgetError);
  CHECK_THROWS_AS(for_each_vector(f, 10, [](const Vector&) {}, 1000), BudgetError);
}

}
