#include <doctest.h>

#include <utility>
#include <vector>

#include "chainmetric/errors.hpp"
#include "chainmetric/field.hpp"
#include "chainmetric/poset.hpp"

using namespace chainmetric;

TEST_SUITE("poset") {

TEST_CASE("chains order every pair") {
  Poset p = Poset::chain(3);
  CHECK(p.size() == 3);
  CHECK(p.leq(1, 3));
  CHECK(p.leq(2, 2));
  CHECK_FALSE(p.leq(3, 1));
  CHECK(p.is_chain());
  CHECK(p.rank_order() == std::vector<unsigned>{1, 2, 3});
  CHECK(p.down_set_mask(2) == 0b011);
}

TEST_CASE("antichains order nothing") {
  Poset p = Poset::antichain(3);
  CHECK_FALSE(p.leq(1, 2));
  CHECK(p.leq(2, 2));
  CHECK_FALSE(p.is_chain());
  CHECK(p.ideal({2}) == std::vector<unsigned>{2});
}

TEST_CASE("covers close transitively and reject cycles") {
  Poset v = Poset::from_covers(3, {{1, 3}, {2, 3}});
  CHECK(v.leq(1, 3));
  CHECK(v.leq(2, 3));
  CHECK_FALSE(v.leq(1, 2));
  CHECK(v.ideal({3}) == std::vector<unsigned>{1, 2, 3});
  CHECK(v.down_set_mask(3) == 0b111);
  std::vector<std::pair<unsigned, unsigned>> covers{{1, 3}, {2, 3}};
  CHECK(v.cover_relations() == covers);

  Poset four = Poset::from_covers(4, {{1, 2}, {2, 4}});
  CHECK(four.leq(1, 4));
  CHECK(four.cover_relations() == std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 4}});

  CHECK_THROWS_AS(Poset::from_covers(2, {{1, 2}, {2, 1}}), ValidationError);
  CHECK_THROWS_AS(Poset::from_covers(2, {{1, 3}}), ValidationError);
}

TEST_CASE("size is capped so down sets fit a machine word") {
  CHECK(Poset::chain(30).size() == 30);
  CHECK_THROWS_AS(Poset::chain(31), ValidationError);
}

TEST_CASE("support ideals split into support, ideal, and maximals") {
  Field f = Field::make(3);
  SupportIdeal chain_si = support_ideal(Poset::chain(3), to_vector(f, {1, 0, 2}));
  CHECK(chain_si.support == std::vector<unsigned>{1, 3});
  CHECK(chain_si.ideal == std::vector<unsigned>{1, 2, 3});
  CHECK(chain_si.maximals == std::vector<unsigned>{3});

  Poset v = Poset::from_covers(3, {{1, 3}, {2, 3}});
  SupportIdeal top = support_ideal(v, to_vector(f, {0, 1, 1}));
  CHECK(top.ideal == std::vector<unsigned>{1, 2, 3});
  CHECK(top.maximals == std::vector<unsigned>{3});
  SupportIdeal flat = support_ideal(v, to_vector(f, {1, 1, 0}));
  CHECK(flat.ideal == std::vector<unsigned>{1, 2});
  CHECK(flat.maximals == std::vector<unsigned>{1, 2});
}

TEST_CASE("poset enumeration hits the known labeled counts") {
  CHECK(enumerate_posets(1).size() == 1);
  CHECK(enumerate_posets(2).size() == 3);
  CHECK(enumerate_posets(3).size() == 19);
}

}
