#include <catch_amalgamated.hpp>

#include "sturmian/io.hpp"

using namespace sturmian;

TEST_CASE("field elements round trip through text") {
  const char* stable[] = {
      "0",          "1",           "-1",           "1/2",
      "-3/7",       "sqrt(2)",     "2*sqrt(2)",    "(1+sqrt(5))/2",
      "(-1+sqrt(5))/2",            "(1+3*sqrt(2))/5",
      "-2+sqrt(5)", "(3-sqrt(5))/2",
  };
  for (const char* text : stable) {
    const FieldElement x = parse_field_element(text);
    CHECK(to_string(x) == text);
    CHECK(parse_field_element(to_string(x)) == x);
  }
}

TEST_CASE("parser accepts sums, decimals, and redundant forms") {
  CHECK(parse_field_element("2/4") == FieldElement::rational(1, 2));
  CHECK(parse_field_element("0.25") == FieldElement::rational(1, 4));
  CHECK(parse_field_element("-0.5") == FieldElement::rational(-1, 2));
  CHECK(parse_field_element("1.5") == FieldElement::rational(3, 2));
  CHECK(parse_field_element("sqrt(5)-2") ==
        FieldElement::quadratic(-2, 1, 5, 1));
  CHECK(parse_field_element("(2-2*sqrt(5))/4") ==
        FieldElement::quadratic(1, -1, 5, 2));
  CHECK(parse_field_element(" ( 1 + sqrt(5) ) / 2 ") ==
        FieldElement::quadratic(1, 1, 5, 2));
}

TEST_CASE("printer emits normal forms") {
  CHECK(to_string(FieldElement::rational(2, 4)) == "1/2");
  CHECK(to_string(FieldElement::sqrt_of(8)) == "2*sqrt(2)");
  CHECK(to_string(parse_field_element("(2-2*sqrt(5))/4")) == "(1-sqrt(5))/2");
  CHECK(to_string(parse_field_element("sqrt(2)/2")) == "sqrt(2)/2");
  CHECK(approx_string(FieldElement::rational(1, 2)) == "0.5");
}

TEST_CASE("malformed field elements are rejected") {
  for (const char* bad : {"", "1//2", "sqrt(-2)", "(1+sqrt(5)/2", "1/0",
                          "abc", "2*", "sqrt()", "1+"}) {
    CHECK_THROWS_AS(parse_field_element(bad), ParseError);
  }
}

TEST_CASE("continued fractions round trip through text") {
  const char* stable[] = {"[0;(1)]", "[0;2,(1)]", "[0;1,2,(3,1)]", "[0;2,3]"};
  for (const char* text : stable) {
    const ContinuedFraction cf = parse_continued_fraction(text);
    CHECK(to_string(cf) == text);
    CHECK(parse_continued_fraction(to_string(cf)) == cf);
  }
  // canonicalization happens inside the parser
  CHECK(to_string(parse_continued_fraction("[0;1,(2,1)]")) == "[0;(1,2)]");
  CHECK(to_string(parse_continued_fraction("[0;2,1]")) == "[0;3]");
}

TEST_CASE("malformed continued fractions are rejected") {
  for (const char* bad : {"[0;]", "[1;2]", "[0;1]", "[0;(1),(2)]", "[0;(1),2]",
                          "[0;0,1]", "[0;1,", "[0;1,]", "0;1,2]", "[0;(1,2"}) {
    CHECK_THROWS_AS(parse_continued_fraction(bad), ParseError);
  }
}

TEST_CASE("intervals parse as half-open pairs") {
  const auto plain = parse_interval("[1/4,2/3)");
  CHECK(plain.first == FieldElement::rational(1, 4));
  CHECK(plain.second == FieldElement::rational(2, 3));
  const auto rich = parse_interval("[ -2+sqrt(5), (3-sqrt(5))/2 )");
  CHECK(rich.first == FieldElement::quadratic(-2, 1, 5, 1));
  CHECK(rich.second == FieldElement::quadratic(3, -1, 5, 2));
  for (const char* bad : {"", "[1,2]", "(1,2)", "[1;2)", "[1,2,3)", "[1)"}) {
    CHECK_THROWS_AS(parse_interval(bad), ParseError);
  }
}
