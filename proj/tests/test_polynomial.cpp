#include <doctest.h>

#include <random>
#include <stdexcept>

#include "catmom/polynomial.hpp"

using namespace catmom;

TEST_CASE("normalization strips trailing zeros") {
  CHECK(Polynomial({1, 2, 0, 0}).degree() == 1);
  CHECK(Polynomial({0, 0}).is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial({1, 1}) - Polynomial({1, 1}) == Polynomial());
}

TEST_CASE("arithmetic and evaluation") {
  const Polynomial p({-1, 0, 1});  // x^2 - 1
  const Polynomial q({1, 1});      // x + 1
  CHECK(p(ExactScalar(3)) == 8);
  CHECK(q * Polynomial({-1, 1}) == p);
  CHECK(to_string(p) == "x^2 - 1");
  CHECK(to_string(Polynomial({ExactScalar(1, 2), -2, 0, 1})) == "x^3 - 2*x + 1/2");
  CHECK(to_string(Polynomial()) == "0");
}

TEST_CASE("divmod reconstructs the dividend") {
  std::mt19937_64 rng(99);
  auto random_poly = [&](std::size_t deg) {
    std::vector<ExactScalar> c(deg + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
    if (sgn(c.back()) == 0) c.back() = 1;
    return Polynomial(c);
  };
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_poly(rng() % 9);
    const auto b = random_poly(rng() % 5);
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(divmod(Polynomial({1}), Polynomial()), std::domain_error);
}

TEST_CASE("interpolation recovers a polynomial") {
  const Polynomial p({3, ExactScalar(-1, 2), 0, 2, 1});
  std::vector<ExactScalar> xs, ys;
  for (long i = -2; i <= 2; ++i) {
    xs.emplace_back(i);
    ys.push_back(p(xs.back()));
  }
  CHECK(interpolate(xs, ys) == p);
  CHECK_THROWS_AS(interpolate(std::vector<ExactScalar>{1, 1}, std::vector<ExactScalar>{0, 1}),
                  std::invalid_argument);
}
