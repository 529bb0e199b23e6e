#include <doctest.h>

#include "pgg/rational.hpp"

using namespace pgg;

TEST_CASE("rational parse and format round trip") {
  CHECK(rat_to_string(rat_from_string("3/4")) == "3/4");
  CHECK(rat_to_string(rat_from_string("-3/4")) == "-3/4");
  CHECK(rat_to_string(rat_from_string("6/8")) == "3/4");
  CHECK(rat_to_string(rat_from_string("  7 ")) == "7");
  CHECK(rat_to_string(rat_from_string("0/5")) == "0");
  CHECK(rat_from_string("2/4") == rat(1, 2));
  CHECK(rat_from_string("-10/4") == rat(-5, 2));
}

TEST_CASE("rational parse rejects junk") {
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("   "), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("2/3x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1 2"), std::invalid_argument);
}

TEST_CASE("rat helper canonicalizes") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK(rat_to_string(rat(-4, -8)) == "1/2");
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("vector helpers") {
  RatVec a{rat(1, 2), rat(1, 3)};
  RatVec b{rat(1, 2), rat(2, 3)};
  CHECK(vec_lex_less(a, b));
  CHECK(!vec_lex_less(b, a));
  CHECK(!vec_lex_less(a, a));
  CHECK(vec_eq(a, a));
  CHECK(!vec_eq(a, b));
  CHECK(dot(a, b) == rat(1, 4) + rat(2, 9));
  CHECK(vec_sum(b) == rat(7, 6));
  CHECK(rat_to_double(rat(1, 4)) == doctest::Approx(0.25));
}
