#include <doctest.h>

#include "hq/serialize.hpp"
#include "support.hpp"

using namespace hq;

TEST_CASE("rationals and matrices as JSON") {
  CHECK(to_json(make_rational(-4, 6)) == "-2/3");
  CHECK(to_json(Rational(3)) == "3/1");
  CHECK(to_json(integer_matrix({{1, -2}, {3, 4}})).dump() == R"([["1","-2"],["3","4"]])");
  CHECK(to_json(q0_param()).dump() == R"(["1/1","1/1","1/1","-1/1","-1/1","-1/1"])");
}

TEST_CASE("field elements round trip through JSON") {
  std::mt19937_64 rng(81);
  const auto t2 = Tower::gaussian()->extend(FieldElement(2));
  const auto t3 = t2->extend(FieldElement(3) + FieldElement::generator(t2));
  for (const auto& t : {Tower::rationals(), Tower::gaussian(), t2, t3}) {
    for (int trial = 0; trial < 5; ++trial) {
      const FieldElement x = hqtest::random_element(rng, t);
      const Json j = to_json(x);
      const FieldElement y = field_element_from_json(Json::parse(j.dump()));
      CHECK(y == x);
      CHECK(y.tower()->same_as(*x.tower()));
    }
  }
  CHECK_THROWS_AS(field_element_from_json(Json::parse(R"({"coords":["1/1"]})")), std::invalid_argument);
  CHECK_THROWS_AS(field_element_from_json(Json::parse(R"({"tower":[],"coords":["x"]})")), std::invalid_argument);
}

TEST_CASE("polynomials list their terms") {
  const MPoly f = MPoly::variable(4, 0) * MPoly::variable(4, 1) - MPoly::constant(4, FieldElement(make_rational(1, 2)));
  const Json j = to_json(f);
  CHECK(j["nvars"] == 4);
  CHECK(j["text"] == f.to_string());
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["exps"] == Json::parse("[1,1,0,0,0,0]"));
  CHECK(field_element_from_json(j["terms"][1]["coeff"]) == FieldElement(make_rational(-1, 2)));
}

TEST_CASE("CSV round trip") {
  const IntegerMatrix m = integer_matrix({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
  const std::vector<std::string> labels{"a", "b", "c"};
  const std::string csv = to_csv(m, labels);
  CHECK(csv.substr(0, csv.find('\n')) == "label,a,b,c");
  const LabeledMatrix back = parse_csv_matrix(csv);
  CHECK(back.labels == labels);
  CHECK(back.matrix == m);

  const LabeledMatrix bare = parse_csv_matrix("2, 1\n1, 2\n\n");
  CHECK(bare.labels == std::vector<std::string>{"e1", "e2"});
  CHECK(bare.matrix == integer_matrix({{2, 1}, {1, 2}}));

  CHECK_THROWS_AS(parse_csv_matrix(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv_matrix("1,2\n3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv_matrix("1,2\n3,x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv_matrix("label,a\na,1,2\n"), std::invalid_argument);
  CHECK_THROWS_AS(to_csv(m, {"a"}), std::invalid_argument);
}
