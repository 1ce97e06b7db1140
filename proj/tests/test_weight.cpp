#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "catmom/moments.hpp"
#include "catmom/weight.hpp"

using namespace catmom;

TEST_CASE("support and values") {
  const WeightSpec s(1.0, 4.0);
  CHECK(s.radius() == doctest::Approx(4.0));
  CHECK(s.support_lo() == doctest::Approx(-3.0));
  CHECK(s.support_hi() == doctest::Approx(5.0));
  CHECK(omega(1.0, s) == doctest::Approx(4.0 / (8.0 * std::numbers::pi)));
  CHECK(omega(5.0, s) == 0.0);
  CHECK(omega(-10.0, s) == 0.0);
  CHECK_THROWS_AS(WeightSpec(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(WeightSpec(0.0, -1.0), std::domain_error);
}

TEST_CASE("CSV output") {
  std::ostringstream os;
  write_weight_csv(os, weight_csv(WeightSpec(0.0, 1.0), 3));
  CHECK(os.str() == "t,omega\n-2,0\n0,0.318309886184\n2,0\n");
  const auto rows = weight_csv(WeightSpec(0.3, 2.0), 11);
  CHECK(rows.back().first == WeightSpec(0.3, 2.0).support_hi());
  CHECK_THROWS_AS(weight_csv(WeightSpec(0.0, 1.0), 1), std::invalid_argument);
}

TEST_CASE("quadrature reproduces exact moments") {
  for (const auto& [h, k] : {std::pair<double, double>{0, 1}, {1, 1}, {-0.5, 2.25}, {3, 0.5}}) {
    const auto exact = mu_recur({ExactScalar(h), ExactScalar(k), 16});
    for (std::size_t n = 0; n <= 16; ++n) {
      const double e = exact[n].get_d();
      const double q = quad_moment(n, WeightSpec(h, k));
      CHECK(std::abs(q - e) <= 1e-10 * std::max(1.0, std::abs(e)));
    }
  }
  // Riemann-sum cross-check of the normalization, independent of the
  // quadrature routine.
  const WeightSpec s(0.7, 1.3);
  const std::size_t m = 200000;
  const double dt = (s.support_hi() - s.support_lo()) / m;
  double mass = 0.0;
  for (std::size_t i = 0; i < m; ++i) mass += omega(s.support_lo() + (i + 0.5) * dt, s) * dt;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("quadrature failures") {
  CHECK_THROWS_AS(quad_moment(2, WeightSpec(0, 1), 1e-15), std::invalid_argument);
  CHECK_THROWS_AS(quad_moment(2, WeightSpec(0, 1), 0.1), std::invalid_argument);
  CHECK_THROWS_AS(quad_moment(400, WeightSpec(10, 1)), QuadratureError);
}
