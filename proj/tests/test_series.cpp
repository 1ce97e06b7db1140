#include <doctest.h>

#include <random>
#include <stdexcept>

#include "catmom/series.hpp"
#include "oracles.hpp"

using namespace catmom;

namespace {

TruncatedSeries series(std::initializer_list<long> c, std::size_t order) {
  std::vector<ExactScalar> v(c.begin(), c.end());
  return TruncatedSeries(v, order);
}

TruncatedSeries random_unit_one(std::mt19937_64& rng, std::size_t order) {
  TruncatedSeries f(order);
  f[0] = 1;
  for (std::size_t i = 1; i < order; ++i) f[i] = oracle::frac(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
  return f;
}

TruncatedSeries random_reversible(std::mt19937_64& rng, std::size_t order) {
  return TruncatedSeries(oracle::random_reversible(rng, order));
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK(series({1, 1}, 3) * series({1, 1}, 3) == series({1, 2, 1}, 3));
  const auto f = series({3, -1, 4, 1, -5}, 5);
  CHECK(f + TruncatedSeries(5) == f);
  CHECK(f - f == TruncatedSeries(5));

  std::vector<ExactScalar> ones(8, ExactScalar(1));
  CHECK(TruncatedSeries(ones) * series({1, -1}, 8) == TruncatedSeries::constant(1, 8));
  CHECK_THROWS_AS(f * series({1}, 4), std::invalid_argument);
}

TEST_CASE("rational kernel matches schoolbook product") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_unit_one(rng, 16);
    const auto b = random_unit_one(rng, 16);
    const std::vector<ExactScalar> av(a.coeffs().begin(), a.coeffs().end());
    const std::vector<ExactScalar> bv(b.coeffs().begin(), b.coeffs().end());
    CHECK((a * b) == TruncatedSeries(oracle::mul(av, bv, 16)));
  }
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(series({1, -1}, 4)) == series({1, 1, 1, 1}, 4));
  CHECK(reciprocal(TruncatedSeries::constant(1, 5)) == TruncatedSeries::constant(1, 5));

  // 1/(1 - t + t^2) against the unrolled recurrence w_n = w_{n-1} - w_{n-2}.
  std::vector<ExactScalar> w = {1, 1};
  while (w.size() < 6) w.push_back(w[w.size() - 1] - w[w.size() - 2]);
  const auto r = reciprocal(series({1, -1, 1}, 6));
  CHECK(r == TruncatedSeries(w));
  CHECK(r == series({1, 1, 0, -1, -1, 0}, 6));

  CHECK_THROWS_AS(reciprocal(series({0, 1}, 4)), std::domain_error);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_unit_one(rng, 20);
    const auto g = reciprocal(f);
    CHECK(f * g == TruncatedSeries::constant(1, 20));
    CHECK(g * f == TruncatedSeries::constant(1, 20));
  }
}

TEST_CASE("compose") {
  const auto t = TruncatedSeries::variable(6);
  const auto f = series({2, -1, 3, 0, 5, 7}, 6);
  CHECK(compose(f, t) == f);

  // t/(1-t) composed with itself is t/(1-2t).
  std::vector<ExactScalar> geo = {0, 1, 1, 1, 1};
  const TruncatedSeries x1(geo);
  CHECK(compose(x1, x1) == series({0, 1, 2, 4, 8}, 5));

  CHECK(compose(series({0, 0, 1}, 5), series({0, 1, 1}, 5)) == series({0, 0, 1, 2, 1}, 5));
  CHECK_THROWS_AS(compose(f, series({1, 1}, 6)), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_reversible(rng, 14);
    const auto b = random_reversible(rng, 14);
    const auto c = random_reversible(rng, 14);
    const std::vector<ExactScalar> av(a.coeffs().begin(), a.coeffs().end());
    const std::vector<ExactScalar> bv(b.coeffs().begin(), b.coeffs().end());
    CHECK(compose(a, b) == TruncatedSeries(oracle::compose(av, bv, 14)));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("sqrt_series") {
  CHECK(sqrt_series(TruncatedSeries::constant(1, 6)) == TruncatedSeries::constant(1, 6));
  CHECK(sqrt_series(series({1, -2, 1}, 6)) == series({1, -1}, 6));

  // Expected values checked by squaring with the schoolbook product.
  const oracle::Coeffs expected = {1, 0, -2, 0, -2, 0, -4, 0};
  CHECK(oracle::mul(expected, expected, 8) == oracle::Coeffs{1, 0, -4, 0, 0, 0, 0, 0});
  CHECK(sqrt_series(series({1, 0, -4}, 8)) == TruncatedSeries(expected));

  CHECK_THROWS_AS(sqrt_series(series({4, 1}, 3)), std::domain_error);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_unit_one(rng, 16);
    const auto g = sqrt_series(f);
    CHECK(g[0] == 1);
    CHECK(g * g == f);
  }
}

TEST_CASE("comp_inverse") {
  CHECK(comp_inverse(TruncatedSeries::variable(8)) == TruncatedSeries::variable(8));

  // t/(1+t^2) reverts to the aerated Catalan numbers.
  const auto f = TruncatedSeries::variable(8) * reciprocal(series({1, 0, 1}, 8));
  CHECK(comp_inverse(f) == series({0, 1, 0, 1, 0, 2, 0, 5}, 8));

  CHECK_THROWS_AS(comp_inverse(series({1, 1}, 4)), std::domain_error);
  CHECK_THROWS_AS(comp_inverse(series({0, 2}, 4)), std::domain_error);

  std::mt19937_64 rng(17);
  const auto t = TruncatedSeries::variable(32);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_reversible(rng, 32);
    const auto inv = comp_inverse(g);
    CHECK(compose(g, inv) == t);
    CHECK(compose(inv, g) == t);
    CHECK(comp_inverse(inv) == g);
  }
}

TEST_CASE("lagrange_coefficient") {
  const auto t = TruncatedSeries::variable(10);
  CHECK(lagrange_coefficient(t, 0) == 1);
  for (std::size_t n = 1; n < 8; ++n) CHECK(lagrange_coefficient(t, n) == 0);

  // u / (1 - u + u^2)
  const auto f = TruncatedSeries::variable(8) * reciprocal(series({1, -1, 1}, 8));
  CHECK(lagrange_coefficient(f, 4) == 9);

  CHECK_NOTHROW(lagrange_coefficient(f, 6));
  CHECK_THROWS_AS(lagrange_coefficient(f, 7), std::invalid_argument);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_reversible(rng, 20);
    const auto inv = comp_inverse(g);
    for (std::size_t n = 0; n + 2 <= 20; ++n) CHECK(lagrange_coefficient(g, n) == inv[n + 1]);
  }
}

TEST_CASE("shift, truncate and printing") {
  const auto f = series({0, 0, 3, 4}, 4);
  CHECK(f.shift(-2) == series({3, 4}, 4));
  CHECK(f.shift(1) == series({0, 0, 0, 3}, 4));
  CHECK_THROWS_AS(f.shift(-3), std::domain_error);
  CHECK(f.truncate(3) == series({0, 0, 3}, 3));
  CHECK_THROWS_AS(f.truncate(5), std::invalid_argument);

  TruncatedSeries g(3);
  g[0] = ExactScalar(1, 2);
  g[1] = -3;
  CHECK(to_string(g) == "1/2,-3,0");
}
