#include <doctest.h>

#include <stdexcept>

#include "catmom/exact.hpp"

using namespace catmom;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK(to_string(parse_rational("0/9")) == "0");
  CHECK(parse_rational("123456789012345678901234567890") ==
        ExactScalar(BigInt("123456789012345678901234567890")));
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "1/0", "1/x", "x", "1.5", "1/-2", "--1", "3/"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}

TEST_CASE("decimals convert exactly") {
  CHECK(parse_decimal("0.5") == ExactScalar(1, 2));
  CHECK(parse_decimal("-1.25") == ExactScalar(-5, 4));
  CHECK(parse_decimal(".75") == ExactScalar(3, 4));
  CHECK(parse_decimal("2") == 2);
  CHECK(parse_decimal("1/3") == ExactScalar(1, 3));
  CHECK_THROWS_AS(parse_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("."), std::invalid_argument);
}

TEST_CASE("binomials with rational upper argument") {
  // C(1/2, i): 1, 1/2, -1/8, 1/16, -5/128
  CHECK(binom(ExactScalar(1, 2), 0) == 1);
  CHECK(binom(ExactScalar(1, 2), 1) == ExactScalar(1, 2));
  CHECK(binom(ExactScalar(1, 2), 2) == ExactScalar(-1, 8));
  CHECK(binom(ExactScalar(1, 2), 3) == ExactScalar(1, 16));
  CHECK(binom(ExactScalar(1, 2), 4) == ExactScalar(-5, 128));
  // Integer upper argument matches the integer binomial.
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n + 2; ++k) CHECK(binom(ExactScalar(n), k) == ExactScalar(binom(n, k)));
}

TEST_CASE("pow keeps results reduced") {
  CHECK(pow(ExactScalar(-2, 3), 3) == ExactScalar(-8, 27));
  CHECK(pow(ExactScalar(0), 0) == 1);
  CHECK(pow(ExactScalar(0), 4) == 0);
  CHECK(is_integer(pow(ExactScalar(5), 20)));
  CHECK_FALSE(is_integer(ExactScalar(1, 3)));
}
