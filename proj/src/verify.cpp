#include "catmom/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "catmom/moments.hpp"
#include "catmom/orthogonal.hpp"
#include "catmom/recurrence.hpp"
#include "catmom/transforms.hpp"
#include "catmom/weight.hpp"

namespace catmom {

bool SuiteReport::ok() const { return failed() == 0; }

std::size_t SuiteReport::passed() const {
  std::size_t n = 0;
  for (const auto& p : properties) n += p.passed;
  return n;
}

std::size_t SuiteReport::failed() const {
  std::size_t n = 0;
  for (const auto& p : properties) n += p.failed;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"group",         "recurrence", "moments",
                                                 "orthogonality", "catalan",    "weight"};
  return names;
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    if (ok) {
      ++result_.passed;
      return;
    }
    if (result_.failed++ == 0) result_.first_failure = describe();
  }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::vector<long> range(long lo, long hi) {
  std::vector<long> v;
  for (long i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<long> nonzero_range(long lo, long hi) {
  std::vector<long> v;
  for (long i = lo; i <= hi; ++i) {
    if (i != 0) v.push_back(i);
  }
  return v;
}

std::string hk(long h, long k) { return "h=" + std::to_string(h) + " k=" + std::to_string(k); }

// ---------------------------------------------------------------- group

struct GroupInstance {
  UnitSequence a, b, c;
  ExactScalar x, y;
};

UnitSequence random_sequence(std::mt19937_64& rng, std::size_t length) {
  std::vector<ExactScalar> v(length);
  v[0] = 1;
  for (std::size_t i = 1; i < length; ++i) v[i] = static_cast<long>(rng() % 7) - 3;
  return UnitSequence(std::move(v));
}

SuiteReport group_suite(Grid grid) {
  constexpr std::size_t kOrder = 32;
  const std::size_t instances = grid == Grid::full ? 100 : 20;
  std::mt19937_64 rng(20070801);

  struct Law {
    const char* name;
    std::function<bool(const GroupInstance&)> holds;
  };
  const auto X = [](const ExactScalar& x) { return UnitSequence::geometric(x, kOrder); };
  const auto I = [](const UnitSequence& s, const ExactScalar& x) { return invert_interp(s, x); };
  const auto L = [](const UnitSequence& s, const ExactScalar& y) { return binomial_interp(s, y); };
  const UnitSequence id = UnitSequence::identity(kOrder);

  const std::vector<Law> laws = {
      {"identity: A.X(0) = X(0).A = A",
       [&](const GroupInstance& g) { return bullet(g.a, id) == g.a && bullet(id, g.a) == g.a; }},
      {"associativity: (A.B).C = A.(B.C)",
       [&](const GroupInstance& g) { return bullet(bullet(g.a, g.b), g.c) == bullet(g.a, bullet(g.b, g.c)); }},
      {"inverse: A.eta(A) = eta(A).A = X(0)",
       [&](const GroupInstance& g) {
         const auto inv = eta(g.a);
         return bullet(g.a, inv) == id && bullet(inv, g.a) == id;
       }},
      {"eta(A.B) = eta(B).eta(A)",
       [&](const GroupInstance& g) { return eta(bullet(g.a, g.b)) == bullet(eta(g.b), eta(g.a)); }},
      {"epsilon(A.B) = epsilon(A).epsilon(B)",
       [&](const GroupInstance& g) { return epsilon(bullet(g.a, g.b)) == bullet(epsilon(g.a), epsilon(g.b)); }},
      {"eta o eta = Id", [&](const GroupInstance& g) { return eta(eta(g.a)) == g.a; }},
      {"epsilon o epsilon = Id", [&](const GroupInstance& g) { return epsilon(epsilon(g.a)) == g.a; }},
      {"eta o epsilon = epsilon o eta",
       [&](const GroupInstance& g) { return eta(epsilon(g.a)) == epsilon(eta(g.a)); }},
      {"left/right multiplications commute: A.(C.B) = (A.C).B",
       [&](const GroupInstance& g) { return bullet(g.a, bullet(g.c, g.b)) == bullet(bullet(g.a, g.c), g.b); }},
      {"L_A o eta = eta o R_(A^-1)",
       [&](const GroupInstance& g) { return bullet(g.a, eta(g.b)) == eta(bullet(g.b, eta(g.a))); }},
      {"eta o L_A = R_(A^-1) o eta",
       [&](const GroupInstance& g) { return eta(bullet(g.a, g.b)) == bullet(eta(g.b), eta(g.a)); }},
      {"L_X(x) o epsilon = epsilon o L_X(-x)",
       [&](const GroupInstance& g) { return bullet(X(g.x), epsilon(g.a)) == epsilon(bullet(X(-g.x), g.a)); }},
      {"R_X(x) o epsilon = epsilon o R_X(-x)",
       [&](const GroupInstance& g) { return bullet(epsilon(g.a), X(g.x)) == epsilon(bullet(g.a, X(-g.x))); }},
      {"gamma o gamma = Id", [&](const GroupInstance& g) { return gamma(gamma(g.a)) == g.a; }},
      {"gamma o L_X(x) o gamma = R_X(x)",
       [&](const GroupInstance& g) { return gamma(bullet(X(g.x), gamma(g.a))) == bullet(g.a, X(g.x)); }},
      {"gamma o R_X(x) o gamma = L_X(x)",
       [&](const GroupInstance& g) { return gamma(bullet(gamma(g.a), X(g.x))) == bullet(X(g.x), g.a); }},
      {"eta(X(x)) = X(-x) = epsilon(X(x))",
       [&](const GroupInstance& g) { return eta(X(g.x)) == X(-g.x) && epsilon(X(g.x)) == X(-g.x); }},
      {"X(x).X(y) = X(x+y)",
       [&](const GroupInstance& g) { return bullet(X(g.x), X(g.y)) == X(g.x + g.y); }},
      {"I(x) = L_X(x) (two implementations agree)",
       [&](const GroupInstance& g) { return invert_interp(g.a, g.x) == invert_interp_group(g.a, g.x); }},
      {"L(x) = R_X(x) (two implementations agree)",
       [&](const GroupInstance& g) { return binomial_interp(g.a, g.x) == binomial_interp_group(g.a, g.x); }},
      {"I(x) o I(-x) = Id", [&](const GroupInstance& g) { return I(I(g.a, -g.x), g.x) == g.a; }},
      {"L(x) o L(-x) = Id", [&](const GroupInstance& g) { return L(L(g.a, -g.x), g.x) == g.a; }},
      {"I(x) o I(y) = I(x+y)", [&](const GroupInstance& g) { return I(I(g.a, g.y), g.x) == I(g.a, g.x + g.y); }},
      {"L(x) o L(y) = L(x+y)", [&](const GroupInstance& g) { return L(L(g.a, g.y), g.x) == L(g.a, g.x + g.y); }},
      {"I(x) o epsilon = epsilon o I(-x)",
       [&](const GroupInstance& g) { return I(epsilon(g.a), g.x) == epsilon(I(g.a, -g.x)); }},
      {"L(x) o epsilon = epsilon o L(-x)",
       [&](const GroupInstance& g) { return L(epsilon(g.a), g.x) == epsilon(L(g.a, -g.x)); }},
      {"I(x) o L(y) = L(y) o I(x)", [&](const GroupInstance& g) { return I(L(g.a, g.y), g.x) == L(I(g.a, g.x), g.y); }},
      {"I(x) o eta = eta o L(-x)", [&](const GroupInstance& g) { return I(eta(g.a), g.x) == eta(L(g.a, -g.x)); }},
      {"eta o I(x) = L(-x) o eta", [&](const GroupInstance& g) { return eta(I(g.a, g.x)) == L(eta(g.a), -g.x); }},
      {"gamma o I(x) o gamma = L(x)", [&](const GroupInstance& g) { return gamma(I(gamma(g.a), g.x)) == L(g.a, g.x); }},
      {"gamma o L(x) o gamma = I(x)", [&](const GroupInstance& g) { return gamma(L(gamma(g.a), g.x)) == I(g.a, g.x); }},
  };

  std::vector<GroupInstance> cases;
  for (std::size_t i = 0; i < instances; ++i) {
    auto a = random_sequence(rng, kOrder);
    auto b = random_sequence(rng, kOrder);
    auto c = random_sequence(rng, kOrder);
    const long x = static_cast<long>(rng() % 7) - 3;
    const long y = static_cast<long>(rng() % 7) - 3;
    cases.push_back({std::move(a), std::move(b), std::move(c), x, y});
  }

  SuiteReport report{"group", {}};
  for (const auto& law : laws) {
    Tally tally(law.name);
    for (std::size_t i = 0; i < cases.size(); ++i) {
      tally.check(law.holds(cases[i]), [&] {
        return "instance " + std::to_string(i) + " (x=" + to_string(cases[i].x) + ", y=" +
               to_string(cases[i].y) + ")";
      });
    }
    report.properties.push_back(tally.take());
  }
  return report;
}

// ---------------------------------------------------------------- recurrence

SuiteReport recurrence_suite(Grid grid) {
  constexpr std::size_t kTerms = 30;
  const auto params = grid == Grid::full ? range(-3, 3) : range(-1, 1);
  const auto shifts = grid == Grid::full ? range(-2, 2) : range(-1, 1);
  const long div_n_max = grid == Grid::full ? 40 : 20;

  Tally gf("generating function (1+(b-h)t)/(1-ht+kt^2)");
  Tally inv("I(x) transport of (b,h,k)");
  Tally bin("L(y) transport of (b,h,k)");
  Tally comb("combined transport, both operator orders");
  Tally comb_sym("combined map = invert then binomial = binomial then invert");
  Tally reverted("I(x)/L(x) after eta transport");

  for (long b : params) {
    for (long h : params) {
      for (long k : params) {
        const RecParams p{b, h, k};
        const UnitSequence w = w_generate(p, kTerms);
        const auto desc = [&] { return to_string(p); };
        const TruncatedSeries series = w_generating_function(p, kTerms);
        gf.check(std::equal(w.terms().begin(), w.terms().end(), series.coeffs().begin()), desc);

        for (long x : shifts) {
          const auto dx = [&] { return to_string(p) + " x=" + std::to_string(x); };
          inv.check(invert_interp(w, x) == w_generate(map_invert(p, x), kTerms), dx);
          bin.check(binomial_interp(w, x) == w_generate(map_binomial(p, x), kTerms), dx);
          reverted.check(eta_transport_check(p, x, kTerms), dx);
          for (long y : shifts) {
            const auto dxy = [&] { return to_string(p) + " x=" + std::to_string(x) + " y=" + std::to_string(y); };
            const UnitSequence expected = w_generate(map_combined(p, x, y), kTerms);
            comb.check(binomial_interp(invert_interp(w, x), y) == expected &&
                           invert_interp(binomial_interp(w, y), x) == expected,
                       dxy);
            comb_sym.check(map_combined(p, x, y) == map_binomial(map_invert(p, x), y) &&
                               map_combined(p, x, y) == map_invert(map_binomial(p, y), x),
                           dxy);
          }
        }
      }
    }
  }

  Tally div("P_(m-1) divides P_(n-1) whenever m | n, n <= " + std::to_string(div_n_max));
  for (long h = -2; h <= 2; ++h) {
    for (long k = -2; k <= 2; ++k) {
      std::vector<Polynomial> family;
      for (long n = 0; n < div_n_max; ++n) family.push_back(p_poly(h, k, n));
      for (long n = 1; n <= div_n_max; ++n) {
        for (long m = 1; m <= n; ++m) {
          if (n % m != 0) continue;
          // P_0 = 1 and the divisor is never zero.
          const bool ok = divmod(family[n - 1], family[m - 1]).second.is_zero();
          div.check(ok, [&] { return hk(h, k) + " m=" + std::to_string(m) + " n=" + std::to_string(n); });
        }
      }
    }
  }

  Tally binet("closed form (r1^(n+1) - r2^(n+1))/(r1 - r2) for rational roots");
  for (long r1 = -3; r1 <= 3; ++r1) {
    for (long r2 = r1 + 1; r2 <= 3; ++r2) {
      const ExactScalar h = r1 + r2;
      const ExactScalar k = r1 * r2;
      const UnitSequence f = w_generate(RecParams::fibonacci(h, k), kTerms);
      bool ok = true;
      for (std::size_t n = 0; n < kTerms; ++n) {
        const auto e = static_cast<unsigned>(n + 1);
        ok = ok && f[n] == (pow(ExactScalar(r1), e) - pow(ExactScalar(r2), e)) / (r1 - r2);
      }
      binet.check(ok, [&] { return "r1=" + std::to_string(r1) + " r2=" + std::to_string(r2); });
    }
  }

  SuiteReport report{"recurrence", {}};
  for (Tally* t : {&gf, &inv, &bin, &comb, &comb_sym, &reverted, &div, &binet}) report.properties.push_back(t->take());
  return report;
}

// ---------------------------------------------------------------- moments

SuiteReport moments_suite(Grid grid) {
  const auto hs = grid == Grid::full ? range(-3, 3) : range(-1, 1);
  const auto ks = grid == Grid::full ? nonzero_range(-3, 3) : nonzero_range(-1, 1);
  const std::size_t n_routes = 24;
  const std::size_t n_paths = grid == Grid::full ? 14 : 10;
  constexpr std::size_t kPrefix = 20;

  Tally routes("gf = cfrac = closed = recur = lagrange, n <= " + std::to_string(n_routes));
  Tally multinomial("lagrange trinomial = multinomial regrouping");
  Tally paths("analytic routes = path enumeration, n <= " + std::to_string(n_paths));
  Tally cfrac_depth("continued fraction stable past the minimum depth");
  Tally shift("L(y)(mu(h,k)) = mu(h+y,k)");
  Tally bridge("eta(F(h,k)) = mu(-h,k)");

  for (long h : hs) {
    for (long k : ks) {
      const MomentRequest req{h, k, n_routes};
      const auto gf = mu_gf_series(req);
      const auto cf = mu_cfrac(req, mu_cfrac_min_depth(n_routes));
      const auto rec = mu_recur(req);
      for (std::size_t n = 0; n <= n_routes; ++n) {
        const auto d = [&] { return hk(h, k) + " n=" + std::to_string(n); };
        const ExactScalar closed = mu_closed(n, h, k);
        const ExactScalar lag = mu_lagrange(n, h, k);
        routes.check(gf[n] == cf[n] && cf[n] == closed && closed == rec[n] && rec[n] == lag, d);
        multinomial.check(lag == mu_lagrange_multinomial(n, h, k), d);
        if (n <= n_paths) paths.check(mu_paths(n, h, k) == rec[n], d);
      }
      cfrac_depth.check(mu_cfrac(req, mu_cfrac_min_depth(n_routes) + 5) == cf, [&] { return hk(h, k); });

      const MomentRequest prefix_req{h, k, kPrefix - 1};
      const UnitSequence mu(mu_recur(prefix_req));
      for (long y = -2; y <= 2; ++y) {
        const UnitSequence shifted(mu_recur({ExactScalar(h + y), k, kPrefix - 1}));
        shift.check(binomial_interp(mu, y) == shifted, [&] { return hk(h, k) + " y=" + std::to_string(y); });
      }
      const UnitSequence reverted = eta(w_generate(RecParams::fibonacci(h, k), kPrefix));
      bridge.check(reverted == UnitSequence(mu_recur({ExactScalar(-h), k, kPrefix - 1})), [&] { return hk(h, k); });
    }
  }

  Tally integral("mu_n integral for integer h, k; n <= 40");
  for (long h = -5; h <= 5; ++h) {
    for (long k : nonzero_range(-5, 5)) {
      const auto rec = mu_recur({h, k, 40});
      bool ok = true;
      for (const auto& v : rec) ok = ok && is_integer(v);
      integral.check(ok, [&] { return hk(h, k); });
    }
  }

  Tally odd("mu_(2m+1)(0,k) = 0");
  Tally even("mu_(2m)(0,k) = k^m C_m");
  for (long k : nonzero_range(-3, 3)) {
    const auto rec = mu_recur({0, k, 25});
    for (std::size_t m = 0; m <= 12; ++m) {
      const auto d = [&] { return "k=" + std::to_string(k) + " m=" + std::to_string(m); };
      odd.check(sgn(rec[2 * m + 1]) == 0, d);
      even.check(rec[2 * m] == pow(ExactScalar(k), static_cast<unsigned>(m)) * catalan(m), d);
    }
  }

  Tally census("mu_n(h,k) monomials h^a k^c = path census by (#east, #south-east)");
  for (std::size_t n = 0; n <= n_paths; ++n) {
    const MomentPolynomial poly = mu_symbolic(n);
    const auto counts = motzkin_census(n);
    bool ok = true;
    ExactScalar total = 0;
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t c = 0; c <= n / 2; ++c) {
        const ExactScalar expected = (a + 2 * c == n) ? ExactScalar(BigInt(static_cast<unsigned long>(counts[c]))) : ExactScalar(0);
        ok = ok && poly.coeff(a, c) == expected;
        total += poly.coeff(a, c);
      }
    }
    ok = ok && total == mu_paths(n, 1, 1);
    census.check(ok, [&] { return "n=" + std::to_string(n) + ": " + poly.to_string(); });
  }

  SuiteReport report{"moments", {}};
  for (Tally* t : {&routes, &multinomial, &paths, &cfrac_depth, &integral, &odd, &even, &shift, &bridge, &census})
    report.properties.push_back(t->take());
  return report;
}

// ---------------------------------------------------------------- orthogonality

SuiteReport orthogonality_suite(Grid grid) {
  const std::size_t n_max = grid == Grid::full ? 12 : 8;
  const auto hs = range(-2, 2);
  const auto ks = nonzero_range(-2, 2);

  Tally cross("V[Q_m Q_n] = 0 for m < n <= " + std::to_string(n_max));
  Tally norm("V[Q_n^2] = k^n");
  Tally delta("V[Q_n] = delta(n,0)");
  Tally printed("double sum with (x+h) coefficients and mu(-h,k) = delta(n,0)");
  Tally mismatch("(x+h) family under mu(h,k) fails for h != 0, n = 1");
  Tally family("Q_n(x; h) = P_n(x; -h)");

  for (long h : hs) {
    for (long k : ks) {
      MomentFunctional v(h, k);
      std::vector<Polynomial> q;
      for (std::size_t n = 0; n <= n_max; ++n) q.push_back(orthogonal_family(n, h, k));
      for (std::size_t n = 0; n <= n_max; ++n) {
        const auto d = [&] { return hk(h, k) + " n=" + std::to_string(n); };
        for (std::size_t m = 0; m < n; ++m) {
          cross.check(sgn(v(q[m] * q[n])) == 0, [&] { return hk(h, k) + " m=" + std::to_string(m) + " n=" + std::to_string(n); });
        }
        norm.check(v(q[n] * q[n]) == pow(ExactScalar(k), static_cast<unsigned>(n)), d);
        delta.check(delta_relation_check(n, h, k).holds, d);
        printed.check(delta_relation_double_sum(n, h, k, true).holds, d);
        family.check(q[n] == p_explicit(n, -h, k), d);
      }
      if (h != 0) {
        mismatch.check(!delta_relation_double_sum(1, h, k, false).holds, [&] { return hk(h, k); });
      }
    }
  }

  Tally explicit_form("explicit P_n = recurrence P_n, n <= 20");
  Tally coeffs("coefficient formula for x^j in P_n, n <= 12");
  Tally dickson("E_n(x,k) = P_n(0,k,x)");
  Tally dickson_catalan("V_(mu(0,k))[E_(2m)] = delta(m,0)");
  for (long h : hs) {
    for (long k : range(-2, 2)) {
      for (std::size_t n = 0; n <= 20; ++n) {
        const auto d = [&] { return hk(h, k) + " n=" + std::to_string(n); };
        const Polynomial p = p_explicit(n, h, k);
        explicit_form.check(p == p_poly(h, k, static_cast<long>(n)), d);
        if (n <= 12) {
          bool ok = true;
          for (std::size_t j = 0; j <= n; ++j) ok = ok && p.coeff(j) == p_coefficient(n, j, h, k);
          coeffs.check(ok, d);
        }
        if (h == 0) dickson.check(dickson_e(n, k) == p_poly(0, k, static_cast<long>(n)), d);
      }
    }
  }
  for (long k : nonzero_range(-3, 3)) {
    MomentFunctional v(0, k);
    for (std::size_t m = 0; m <= 10; ++m) {
      dickson_catalan.check(v(dickson_e(2 * m, k)) == (m == 0 ? 1 : 0),
                            [&] { return "k=" + std::to_string(k) + " m=" + std::to_string(m); });
    }
  }

  SuiteReport report{"orthogonality", {}};
  for (Tally* t : {&cross, &norm, &delta, &printed, &mismatch, &family, &explicit_form, &coeffs, &dickson, &dickson_catalan})
    report.properties.push_back(t->take());
  return report;
}

// ---------------------------------------------------------------- catalan

SuiteReport catalan_suite(Grid grid) {
  const std::size_t core_max = 100;
  const std::size_t k_form_max = grid == Grid::full ? 30 : 15;

  Tally core("m=0.." + std::to_string(core_max));
  for (std::size_t m = 0; m <= core_max; ++m) {
    core.check(catalan_identity_core(m) == (m == 0 ? 1 : 0), [&] { return "m=" + std::to_string(m); });
  }
  Tally k_form("k-form m=0.." + std::to_string(k_form_max) + ", k in {-3..3}\\{0}");
  for (long k : nonzero_range(-3, 3)) {
    for (std::size_t m = 0; m <= k_form_max; ++m) {
      k_form.check(catalan_identity(m, k) == (m == 0 ? 1 : 0),
                   [&] { return "k=" + std::to_string(k) + " m=" + std::to_string(m); });
    }
  }
  SuiteReport report{"catalan", {}};
  report.properties.push_back(core.take());
  report.properties.push_back(k_form.take());
  return report;
}

// ---------------------------------------------------------------- weight

SuiteReport weight_suite(Grid grid) {
  const std::size_t n_max = grid == Grid::full ? 12 : 6;
  Tally quad("quadrature = exact moment, n <= " + std::to_string(n_max) + ", rel 1e-8");
  Tally mass("integral of omega = 1 to 1e-10");
  Tally symmetry("omega(h+s) = omega(h-s) to 1e-12");
  Tally scaling("omega_(h,k)(t) = omega_(0,1)((t-h)/sqrt(k))/sqrt(k) to 1e-12");
  const WeightSpec unit(0, 1);
  for (long h : {0L, 1L, 2L}) {
    for (long k : {1L, 2L, 4L}) {
      const WeightSpec spec(static_cast<double>(h), static_cast<double>(k));
      const auto exact = mu_recur({h, k, n_max});
      for (std::size_t n = 0; n <= n_max; ++n) {
        const double q = quad_moment(n, spec, 1e-12);
        const double e = exact[n].get_d();
        const double err = std::abs(q - e) / std::max(1.0, std::abs(e));
        quad.check(err <= 1e-8, [&] {
          return hk(h, k) + " n=" + std::to_string(n) + " quad=" + std::to_string(q) + " exact=" + std::to_string(e);
        });
        if (n == 0) mass.check(std::abs(q - 1.0) <= 1e-10, [&] { return hk(h, k); });
      }
      const double r = spec.radius();
      const double sk = std::sqrt(static_cast<double>(k));
      // Interior samples: at the support edges the square root amplifies
      // rounding in t - h.
      for (int i = -19; i <= 19; ++i) {
        const double s = r * i / 20.0;
        symmetry.check(std::abs(omega(h + s, spec) - omega(h - s, spec)) <= 1e-12, [&] { return hk(h, k) + " s=" + std::to_string(s); });
        const double t = h + s;
        const double lhs = omega(t, spec);
        const double rhs = omega((t - h) / sk, unit) / sk;
        scaling.check(std::abs(lhs - rhs) <= 1e-12, [&] { return hk(h, k) + " t=" + std::to_string(t); });
      }
    }
  }
  SuiteReport report{"weight", {}};
  for (Tally* t : {&quad, &mass, &symmetry, &scaling}) report.properties.push_back(t->take());
  return report;
}

}  // namespace

SuiteReport run_suite(std::string_view name, Grid grid) {
  if (name == "group") return group_suite(grid);
  if (name == "recurrence") return recurrence_suite(grid);
  if (name == "moments") return moments_suite(grid);
  if (name == "orthogonality") return orthogonality_suite(grid);
  if (name == "catalan") return catalan_suite(grid);
  if (name == "weight") return weight_suite(grid);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

void print_report(std::ostream& os, const SuiteReport& report) {
  for (const auto& p : report.properties) {
    os << p.name << ": " << p.passed << " pass";
    if (p.failed > 0) os << ", " << p.failed << " fail (first: " << p.first_failure << ")";
    os << "\n";
  }
  os << report.suite << ": " << report.passed() << " pass, " << report.failed() << " fail\n";
}

}  // namespace catmom
