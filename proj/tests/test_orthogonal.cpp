#include <doctest.h>

#include <stdexcept>
#include <thread>

#include "catmom/moments.hpp"
#include "catmom/orthogonal.hpp"
#include "catmom/recurrence.hpp"

using namespace catmom;

TEST_CASE("Dickson polynomials") {
  const ExactScalar k(3);
  CHECK(dickson_e(0, k) == Polynomial({1}));
  CHECK(dickson_e(1, k) == Polynomial({0, 1}));
  CHECK(dickson_e(2, k) == Polynomial({-3, 0, 1}));
  CHECK(dickson_e(3, k) == Polynomial({0, -6, 0, 1}));
  // E_n(x, k) = P_n(0, k, x).
  for (long n = 0; n < 12; ++n) CHECK(dickson_e(n, k) == p_poly(0, k, n));
}

TEST_CASE("explicit form of P_n") {
  for (const auto& [h, k] : {std::pair<ExactScalar, ExactScalar>{1, 1}, {-2, 3}, {ExactScalar(1, 3), -4}}) {
    for (long n = 0; n < 14; ++n) {
      const auto p = p_poly(h, k, n);
      CHECK(p_explicit(n, h, k) == p);
      for (long j = 0; j <= n; ++j) CHECK(p_coefficient(n, j, h, k) == p.coeff(j));
    }
  }
}

TEST_CASE("moment functional") {
  MomentFunctional v(2, 3);
  CHECK(v(Polynomial({1})) == 1);
  CHECK(v(Polynomial({0, 1})) == 2);
  CHECK(v(Polynomial({-2, 1})) == 0);
  CHECK(v.moment(2) == 4 + 3);
  CHECK(v.cached() >= 3);
  CHECK_THROWS_AS(MomentFunctional(1, 0), std::domain_error);

  // Concurrent extension yields the same values as a serial evaluation.
  MomentFunctional shared(1, 1);
  std::vector<std::thread> workers;
  std::vector<ExactScalar> got(8);
  for (std::size_t i = 0; i < got.size(); ++i)
    workers.emplace_back([&, i] { got[i] = shared.moment(5 * i + 3); });
  for (auto& t : workers) t.join();
  const auto ref = mu_recur({1, 1, 40});
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == ref[5 * i + 3]);
}

TEST_CASE("orthogonality of Q_n") {
  for (const auto& [h, k] : {std::pair<ExactScalar, ExactScalar>{1, 1}, {-2, 3}, {ExactScalar(5, 2), ExactScalar(-1, 4)}}) {
    MomentFunctional v(h, k);
    for (std::size_t n = 0; n < 10; ++n) {
      const auto qn = orthogonal_family(n, h, k);
      CHECK(qn.degree() == static_cast<long>(n));
      CHECK(v(qn * qn) == pow(k, n));
      for (std::size_t m = 0; m < n; ++m) CHECK(v(qn * orthogonal_family(m, h, k)) == 0);
      const auto d = delta_relation_check(n, h, k);
      CHECK(d.holds);
      CHECK(d.value == (n == 0 ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(orthogonal_family(2, 1, 0), std::domain_error);
}

TEST_CASE("double-sum relation and its sign convention") {
  for (std::size_t n = 0; n < 10; ++n) {
    CHECK(delta_relation_double_sum(n, 2, 3, true).holds);
    CHECK(delta_relation_double_sum(n, 0, 3, false).holds);
  }
  // Pairing (x + h) coefficients with mu(h, k) breaks once h != 0.
  const auto bad = delta_relation_double_sum(1, 2, 3, false);
  CHECK_FALSE(bad.holds);
  CHECK(bad.value == 4);
}

TEST_CASE("Catalan identity") {
  CHECK(catalan_identity_core(0) == 1);
  CHECK(catalan_identity_core(1) == 0);
  for (std::size_t m = 1; m <= 40; ++m) CHECK(catalan_identity_core(m) == 0);
  for (long k = -3; k <= 3; ++k)
    for (std::size_t m = 0; m <= 10; ++m)
      CHECK(catalan_identity(m, k) == (m == 0 ? 1 : 0));
}
