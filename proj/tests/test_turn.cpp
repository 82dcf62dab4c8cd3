#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scf/turn.hpp"

using scf::Turn;

TEST_CASE("construction normalizes mod 1 and reduces") {
  CHECK(Turn(2, 6) == Turn(1, 3));
  CHECK(Turn(7, 3) == Turn(1, 3));
  CHECK(Turn(-1, 3) == Turn(2, 3));
  CHECK(Turn(3, -9) == Turn(2, 3));
  CHECK(Turn(0, 5) == Turn());
  CHECK(Turn(4, 4).is_zero());
  CHECK_THROWS_AS(Turn(1, 0), scf::invalid_input);
}

TEST_CASE("negation and folding") {
  CHECK(Turn(1, 3).negated() == Turn(2, 3));
  CHECK(Turn().negated() == Turn());
  CHECK(Turn(1, 2).negated() == Turn(1, 2));
  CHECK(Turn(2, 3).folded() == Turn(1, 3));
  CHECK(Turn(1, 3).folded() == Turn(1, 3));
  CHECK(Turn(9, 10).folded() == Turn(1, 10));
  CHECK(Turn(1, 2).folded() == Turn(1, 2));
  CHECK(Turn().is_self_symmetric());
  CHECK(Turn(1, 2).is_self_symmetric());
  CHECK_FALSE(Turn(1, 3).is_self_symmetric());
}

TEST_CASE("integer scaling wraps") {
  CHECK(Turn(1, 5).scaled(2) == Turn(2, 5));
  CHECK(Turn(1, 5).scaled(7) == Turn(2, 5));
  CHECK(Turn(1, 5).scaled(-1) == Turn(4, 5));
  CHECK(Turn(1, 5).scaled(0) == Turn());
  CHECK(Turn(3, 7).scaled(5) == Turn(1, 7));
}

TEST_CASE("addition mod 1") {
  CHECK(Turn(1, 3) + Turn(1, 6) == Turn(1, 2));
  CHECK(Turn(2, 3) + Turn(2, 3) == Turn(1, 3));
  CHECK(Turn(1, 2) + Turn(1, 2) == Turn());
}

TEST_CASE("ordering is exact") {
  CHECK(Turn(1, 3) < Turn(2, 5));
  CHECK(Turn(1, 7) < Turn(1, 6));
  CHECK_FALSE(Turn(1, 2) < Turn(1, 2));
  // values with large denominators keep exact comparisons
  CHECK(Turn(999999, 1000000) < Turn(999999999, 1000000000));
}

TEST_CASE("parse and print round-trip") {
  CHECK(Turn::parse("1/5") == Turn(1, 5));
  CHECK(Turn::parse("0") == Turn());
  CHECK(Turn::parse("7/3") == Turn(1, 3));
  CHECK(Turn(1, 5).str() == "1/5");
  CHECK(Turn().str() == "0/1");
  CHECK(Turn::parse(Turn(3, 8).str()) == Turn(3, 8));
  CHECK_THROWS_AS(Turn::parse("1/0"), scf::invalid_input);
  CHECK_THROWS_AS(Turn::parse("x"), scf::invalid_input);
  CHECK_THROWS_AS(Turn::parse(""), scf::invalid_input);
}
