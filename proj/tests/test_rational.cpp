#include <doctest.h>

#include "glat/rational.hpp"
#include "glat/errors.hpp"

using namespace glat;

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
  CHECK(rat_str(rat_of(3, 6)) == "1/2");
  CHECK(rat_str(rat_of(-3, 6)) == "-1/2");
  CHECK(rat_str(rat_of(3, -6)) == "-1/2");
  CHECK(rat_str(rat_of(0, 7)) == "0/1");
  CHECK(rat_str(rat_of(5)) == "5/1");
}

TEST_CASE("parse round trip") {
  for (const char* s : {"0/1", "-7/3", "12/1", "1/9"}) CHECK(rat_str(rat_parse(s)) == s);
  CHECK(rat_parse("4/6") == rat_of(2, 3));
  CHECK(rat_parse("-4") == rat_of(-4));
  CHECK(rat_parse("+4") == rat_of(4));
}

TEST_CASE("parse rejects junk") {
  for (const char* s : {"", "/", "1/", "/2", "1/0", "a", "1.5", "1/2/3", "2 /3"})
    CHECK_THROWS_AS(rat_parse(s), InputError);
}

TEST_CASE("arithmetic stays canonical") {
  Rat a = rat_of(1, 6);
  Rat b = rat_of(1, 3);
  Rat c = a + b;
  CHECK(rat_str(c) == "1/2");
  Rat d = c - c;
  CHECK(rat_str(d) == "0/1");
}
