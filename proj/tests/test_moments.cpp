#include <doctest.h>

#include <random>
#include <stdexcept>

#include "catmom/moments.hpp"
#include "oracles.hpp"

using namespace catmom;

namespace {

const std::vector<std::pair<ExactScalar, ExactScalar>>& grid() {
  static const std::vector<std::pair<ExactScalar, ExactScalar>> g = {
      {1, 1}, {0, 1}, {2, 1}, {1, 2}, {-3, 5}, {ExactScalar(1, 2), ExactScalar(-2, 3)}, {7, -1}};
  return g;
}

}  // namespace

TEST_CASE("known values") {
  const auto motzkin = mu_recur({1, 1, 9});
  CHECK(motzkin == std::vector<ExactScalar>{1, 1, 2, 4, 9, 21, 51, 127, 323, 835});
  CHECK(mu_closed(3, 1, 2) == 7);
  CHECK(mu_closed(4, 1, 1) == 9);
  const ExactScalar h(-5, 3), k(2, 7);
  CHECK(mu_gf_series({h, k, 2})[2] == h * h + k);
  CHECK(mu_closed(0, h, k) == 1);
  CHECK(mu_closed(1, h, k) == h);
  // Aerated Catalan numbers at h = 0.
  CHECK(mu_recur({0, 1, 8}) == std::vector<ExactScalar>{1, 0, 1, 0, 2, 0, 5, 0, 14});
}

TEST_CASE("brute-force path oracle") {
  for (const auto& [h, k] : grid()) {
    for (std::size_t n = 0; n <= 9; ++n) {
      const auto ref = oracle::motzkin_brute_force(n, h, k);
      CHECK(mu_paths(n, h, k) == ref);
      CHECK(mu_closed(n, h, k) == ref);
      CHECK(mu_lagrange(n, h, k) == ref);
      CHECK(mu_lagrange_multinomial(n, h, k) == ref);
    }
  }
}

TEST_CASE("series routes agree") {
  for (const auto& [h, k] : grid()) {
    const MomentRequest req{h, k, 30};
    const auto a = mu_gf_series(req);
    REQUIRE(a.size() == 31);
    CHECK(mu_recur(req) == a);
    CHECK(mu_cfrac(req, mu_cfrac_min_depth(30)) == a);
    CHECK(mu_cfrac(req, 40) == a);
    for (std::size_t n = 0; n <= 30; ++n) CHECK(mu_closed(n, h, k) == a[n]);
  }
}

TEST_CASE("continued fraction depth") {
  CHECK(mu_cfrac_min_depth(0) == 1);
  CHECK(mu_cfrac_min_depth(10) == 6);
  CHECK(mu_cfrac_min_depth(11) == 6);
  CHECK_THROWS_WITH_AS(mu_cfrac({1, 1, 10}, 5), doctest::Contains("6"), std::invalid_argument);
  // The minimum depth is already exact; deeper cuts change nothing.
  const MomentRequest req{1, 1, 9};
  CHECK(mu_cfrac(req, 5) == mu_gf_series(req));
  CHECK(mu_cfrac(req, 5) == mu_cfrac(req, 12));
}

TEST_CASE("k = 0 is rejected") {
  CHECK_THROWS_AS(mu_gf_series({1, 0, 5}), std::domain_error);
  CHECK_THROWS_AS(mu_recur({1, 0, 5}), std::domain_error);
  CHECK_THROWS_AS(mu_cfrac({1, 0, 5}, 3), std::domain_error);
  CHECK_THROWS_AS(mu_closed(3, 1, 0), std::domain_error);
}

TEST_CASE("negated sign convention") {
  CHECK(mu_lagrange(1, 3, 2, MomentSign::negated_h) == -3);
  for (std::size_t n = 0; n <= 12; ++n)
    CHECK(mu_lagrange(n, 3, 2, MomentSign::negated_h) == mu_closed(n, -3, 2));
}

TEST_CASE("paths") {
  const auto paths = enumerate_paths(3);
  REQUIRE(paths.size() == 4);
  CHECK(paths[0].to_string() == "HHH");
  CHECK(paths[1].to_string() == "UDH");
  CHECK(paths[2].to_string() == "UHD");
  CHECK(paths[3].to_string() == "HUD");
  CHECK(paths[0].weight_monomial() == "h^3");
  CHECK(paths[1].weight_monomial() == "h*k");
  CHECK(MotzkinPath{}.weight_monomial() == "1");
  for (const auto& p : paths) CHECK(p.is_valid());
  CHECK_FALSE(MotzkinPath{{Step::south_east, Step::north_east}}.is_valid());
  CHECK_FALSE(MotzkinPath{{Step::north_east}}.is_valid());

  CHECK_THROWS_AS(mu_paths(19, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(enumerate_paths(5, 4), std::out_of_range);
}

TEST_CASE("census matches C(n, 2c) Catalan(c)") {
  for (std::size_t n = 0; n <= 14; ++n) {
    const auto counts = motzkin_census(n);
    REQUIRE(counts.size() == n / 2 + 1);
    for (std::size_t c = 0; c <= n / 2; ++c) {
      BigInt ref = binom(n, 2 * c) * catalan(c).get_num();
      CHECK(BigInt(counts[c]) == ref);
    }
  }
}

TEST_CASE("Catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
}

TEST_CASE("symbolic moments") {
  CHECK(mu_symbolic(0).to_string() == "1");
  CHECK(mu_symbolic(2).to_string() == "h^2 + k");
  CHECK(mu_symbolic(4).to_string() == "h^4 + 6*h^2*k + 2*k^2");
  const auto m6 = mu_symbolic(6);
  CHECK(m6.coeff(0, 3) == 5);
  CHECK(m6.coeff(6, 0) == 1);
  CHECK(m6.coeff(1, 1) == 0);
}
