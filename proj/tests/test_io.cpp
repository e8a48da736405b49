#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "casson/checks.hpp"
#include "casson/io.hpp"

using namespace casson;
using io::json;

namespace {

json worked_example_json() {
  return json::parse(R"({
    "genus": 3,
    "factors": [
      {"type": "bp",
       "spine": [{"x": [1,0,0,0,0,0], "y": [0,0,-1,1,0,0]}],
       "c": [0,1,0,0,0,0], "power": 1, "side": "TB"},
      {"type": "bp",
       "spine": [{"x": [1,0,0,0,0,1], "y": [0,0,0,1,0,0]}],
       "c": [0,0,0,0,1,0], "power": 1, "side": "TA"}
    ]
  })");
}

}  // namespace

TEST_CASE("integers round-trip, large values as strings") {
  CHECK(io::int_to_json(Int(42)) == json(42));
  CHECK(io::int_from_json(json(-7), "x") == -7);
  const Int big("123456789012345678901234567890");
  const json j = io::int_to_json(big);
  CHECK(j.is_string());
  CHECK(io::int_from_json(j, "x") == big);
  CHECK(io::int_from_json(json("-17"), "x") == -17);
  CHECK_THROWS_AS(io::int_from_json(json("abc"), "x"), ValidationError);
  CHECK_THROWS_AS(io::int_from_json(json(1.5), "x"), ValidationError);
}

TEST_CASE("vectors validate their length") {
  const json j = json::array({1, 2, 3, 4, 5, 6});
  const HomologyVector v = io::vector_from_json(3, j, "v");
  CHECK(v[0] == 1);
  CHECK(v[5] == 6);
  CHECK(io::vector_to_json(v) == j);
  CHECK_THROWS_AS(io::vector_from_json(4, j, "v"), ValidationError);
}

TEST_CASE("cube vectors serialize as triple/coeff terms") {
  checks::Rng rng(53);
  const ExteriorCubeVector v = checks::random_cube(rng, 3, 4);
  CHECK(io::cube_from_json(3, io::cube_to_json(v), "tau") == v);
  CHECK_THROWS_AS(
      io::cube_from_json(3, json::parse(R"([{"triple":[2,1,0],"coeff":1}])"),
                         "tau"),
      ValidationError);
}

TEST_CASE("the worked example parses, evaluates, and round-trips") {
  const AnnotatedWord w = io::annotated_word_from_json(worked_example_json());
  CHECK(w.genus() == 3);
  CHECK(eval_F(w) == 2);
  const json dumped = io::annotated_word_to_json(w);
  const AnnotatedWord again = io::annotated_word_from_json(dumped);
  CHECK(io::annotated_word_to_json(again) == dumped);
  CHECK(eval_F(again) == 2);
  CHECK(dumped.dump() == io::annotated_word_to_json(w).dump());
}

TEST_CASE("word files reject malformed data with located messages") {
  json missing_genus = worked_example_json();
  missing_genus.erase("genus");
  CHECK_THROWS_AS(io::annotated_word_from_json(missing_genus),
                  ValidationError);

  json bad_side = worked_example_json();
  bad_side["factors"][0]["side"] = "TC";
  CHECK_THROWS_AS(io::annotated_word_from_json(bad_side), ValidationError);

  json bad_type = worked_example_json();
  bad_type["factors"][1]["type"] = "mystery";
  try {
    io::annotated_word_from_json(bad_type);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("factor 1") != std::string::npos);
  }

  json short_vector = worked_example_json();
  short_vector["factors"][0]["c"] = json::array({1, 0});
  CHECK_THROWS_AS(io::annotated_word_from_json(short_vector), ValidationError);
}

TEST_CASE("conjugated factors nest in the wire format") {
  const json j = json::parse(R"({
    "genus": 3,
    "factors": [
      {"type": "conj",
       "by": [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],
              [0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]],
       "inner": {"type": "sep", "power": 2},
       "F": 0}
    ]
  })");
  const AnnotatedWord w = io::annotated_word_from_json(j);
  CHECK(eval_F(w) == 0);
  const json back = io::annotated_word_to_json(w);
  CHECK(back["factors"][0]["type"] == "conj");
  CHECK(back["factors"][0]["inner"]["type"] == "sep");
}

TEST_CASE("separating factors carry their F value through serialization") {
  const json j = json::parse(
      R"({"genus": 3, "factors": [{"type": "sep", "power": 3, "F": -4}]})");
  const AnnotatedWord w = io::annotated_word_from_json(j);
  CHECK(eval_F(w) == -4);
  const json back = io::annotated_word_to_json(w);
  CHECK(back["factors"][0]["F"] == json(-4));
}

TEST_CASE("bare words ignore annotations") {
  const TwistWord w = io::word_from_json(worked_example_json());
  CHECK(w.factors().size() == 2);
  CHECK(is_torelli(w));
}

TEST_CASE("seifert files") {
  const SeifertMatrix v = io::seifert_from_json(
      json::parse(R"({"seifert": [[-1, 1], [0, -1]]})"));
  CHECK(v.size() == 2);
  CHECK(io::seifert_from_json(json::parse(R"({"seifert": []})")).size() == 0);
  CHECK_THROWS_AS(io::seifert_from_json(json::parse(R"({"matrix": []})")),
                  ValidationError);
}

TEST_CASE("laurent polynomials render both ways") {
  const LaurentPolynomial t({{-1, 1}, {0, -1}, {1, 1}});
  CHECK(io::laurent_to_string(t) == "t^-1 - 1 + t");
  CHECK(io::laurent_to_string(LaurentPolynomial({{0, 1}})) == "1");
  CHECK(io::laurent_to_string(LaurentPolynomial()) == "0");
  const json j = io::laurent_to_json(t);
  CHECK(j.size() == 3);
  CHECK(j[0]["exp"] == -1);
}

TEST_CASE("matrices reject ragged rows") {
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[1,2],[3]]"), "m"),
                  ValidationError);
}
