#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "chainmetric/anticode.hpp"
#include "chainmetric/codes.hpp"
#include "chainmetric/errors.hpp"
#include "chainmetric/field.hpp"
#include "chainmetric/io.hpp"
#include "chainmetric/poset.hpp"
#include "chainmetric/weight.hpp"

using namespace chainmetric;
using chainmetric::io::json;

TEST_SUITE("io") {

TEST_CASE("fields serialize with their reduction polynomial") {
  json f4 = io::field_json(Field::of_order(4));
  CHECK(f4["p"] == 2);
  CHECK(f4["k"] == 2);
  CHECK(f4["q"] == 4);
  CHECK(f4["reduction"] == "x^2 + x + 1");
  CHECK_FALSE(io::field_json(Field::make(5)).contains("reduction"));
}

TEST_CASE("weights round trip as bare arrays") {
  Field f = Field::make(5);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  json j = io::weight_json(lee);
  CHECK(io::weight_from_json(f, j).values() == lee.values());
  CHECK_THROWS_AS(io::weight_from_json(f, json::array({0, 1})), ValidationError);
  CHECK_THROWS_AS(io::weight_from_json(f, json::object()), ValidationError);
}

TEST_CASE("posets round trip through their cover relations") {
  Poset v = Poset::from_covers(3, {{1, 3}, {2, 3}});
  json j = io::poset_json(v);
  CHECK(j["n"] == 3);
  CHECK(io::poset_from_json(j) == v);
  Poset chain = Poset::chain(4);
  CHECK(io::poset_from_json(io::poset_json(chain)) == chain);
  CHECK_THROWS_AS(io::poset_from_json(json::object()), ValidationError);
}

TEST_CASE("codes round trip with q, n, and index-encoded words") {
  Field f = Field::make(3);
  Code C = construct_mds(f, 3, 2);
  json j = io::code_json(C);
  CHECK(j["q"] == 3);
  CHECK(j["n"] == 3);
  CHECK(j["words"].size() == 9);
  Code back = io::code_from_json(j);
  CHECK(back.words() == C.words());
  CHECK_THROWS_AS(io::code_from_json(json::object()), ValidationError);
}

TEST_CASE("vector sets reject mismatched headers") {
  Field f = Field::make(3);
  std::vector<Vector> vs{to_vector(f, {0, 1}), to_vector(f, {2, 2})};
  json j = io::vector_set_json(f, 2, vs);
  CHECK(io::vector_set_from_json(f, 2, j) == vs);
  CHECK_THROWS_AS(io::vector_set_from_json(Field::make(5), 2, j), ValidationError);
  CHECK_THROWS_AS(io::vector_set_from_json(f, 3, j), ValidationError);
  json bad = j;
  bad["words"][0][0] = 7;
  CHECK_THROWS_AS(io::vector_set_from_json(f, 2, bad), ValidationError);
}

TEST_CASE("result objects expose the documented keys") {
  Field f = Field::make(5);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  json b = io::ball_size_json(ball_size(lee, 2, 3));
  CHECK(b["size"] == 15);
  CHECK(b["radius"]["S"] == 1);
  CHECK(b["radius"]["R"] == 1);

  json a = io::anticode_size_json(optimal_anticode_size(lee, 1, 1));
  CHECK(a["size"] == 2);
  CHECK(a["branch"] == "at-or-above-threshold");

  json s = io::weight_stats_json(lee);
  CHECK(s["max_weight"] == 2);
  CHECK(s["threshold"] == 1);

  json r = io::code_report_json(
      analyze_code(make_standard_weight(Field::make(2), WeightKind::hamming),
                   construct_mds(Field::make(2), 3, 3)));
  CHECK(r["size"] == 2);
  CHECK(r["singleton"]["mds"] == true);
  CHECK(r["diameter"]["diameter_perfect"] == true);
  CHECK(r.contains("packing"));
  CHECK(r.contains("perfection"));
}

TEST_CASE("tables flatten nested keys") {
  Field f = Field::make(5);
  WeightTable lee = make_standard_weight(f, WeightKind::lee);
  std::string table = io::render_table(io::ball_size_json(ball_size(lee, 2, 3)));
  CHECK(table.find("radius.S") != std::string::npos);
  CHECK(table.find("15") != std::string::npos);
}

TEST_CASE("file loading wraps parse problems") {
  const char* path = "io_test_tmp.json";
  {
    std::ofstream out(path);
    out << "{\"q\": 5}";
  }
  CHECK(io::load_json_file(path)["q"] == 5);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(io::load_json_file(path), ValidationError);
  std::remove(path);
  CHECK_THROWS_AS(io::load_json_file(path), ValidationError);
}

}
