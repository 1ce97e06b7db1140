#include "catmom/moments.hpp"

#include <algorithm>
#include <stdexcept>

#include "catmom/polynomial.hpp"
#include "catmom/series.hpp"

namespace catmom {

namespace {

void require_nonzero_k(const ExactScalar& k, const char* where) {
  if (sgn(k) == 0) {
    throw std::domain_error(std::string(where) + ": moment functional undefined (k = 0)");
  }
}

ExactScalar int_pow(const ExactScalar& base, std::size_t e) {
  return pow(base, static_cast<unsigned>(e));
}

}  // namespace

std::vector<ExactScalar> mu_gf_series(const MomentRequest& req) {
  require_nonzero_k(req.k, "mu_gf_series");
  const std::size_t order = req.n_max + 3;
  const ExactScalar& h = req.h;
  const ExactScalar& k = req.k;
  const TruncatedSeries disc({ExactScalar(1), ExactScalar(-2 * h), ExactScalar(h * h - 4 * k)}, order);
  const TruncatedSeries one_minus_ht({ExactScalar(1), ExactScalar(-h)}, order);
  const TruncatedSeries numerator = one_minus_ht - sqrt_series(disc);
  // The numerator is divisible by t^2; shift throws otherwise.
  const TruncatedSeries quotient = numerator.shift(-2);
  std::vector<ExactScalar> mu(req.n_max + 1);
  const ExactScalar inv = 1 / (2 * k);
  for (std::size_t n = 0; n <= req.n_max; ++n) mu[n] = quotient[n] * inv;
  return mu;
}

std::size_t mu_cfrac_min_depth(std::size_t n_max) { return n_max / 2 + 1; }

std::vector<ExactScalar> mu_cfrac(const MomentRequest& req, std::size_t depth) {
  require_nonzero_k(req.k, "mu_cfrac");
  const std::size_t need = mu_cfrac_min_depth(req.n_max);
  if (depth < need) {
    throw std::invalid_argument("mu_cfrac: depth " + std::to_string(depth) +
                                " is insufficient for n_max = " + std::to_string(req.n_max) +
                                "; required depth >= " + std::to_string(need));
  }
  const std::size_t order = req.n_max + 1;
  const TruncatedSeries base({ExactScalar(1), ExactScalar(-req.h)}, order);  // 1 - h t
  const TruncatedSeries kt2({ExactScalar(0), ExactScalar(0), req.k}, order);

  // Innermost level is 1 / (1 - h t); each pass adds one partial numerator.
  TruncatedSeries value = reciprocal(base);
  for (std::size_t level = 0; level < depth; ++level) value = reciprocal(base - kt2 * value);
  return {value.coeffs().begin(), value.coeffs().end()};
}

ExactScalar mu_closed(std::size_t n, const ExactScalar& h, const ExactScalar& k) {
  require_nonzero_k(k, "mu_closed");
  if (n == 0) return 1;
  const std::size_t upper = (n % 2 == 1) ? (n + 1) / 2 : (n + 2) / 2;
  const ExactScalar half(1, 2);
  const ExactScalar minus_two_h = -2 * h;
  const ExactScalar disc = h * h - 4 * k;
  ExactScalar sum = 0;
  for (std::size_t j = 0; j <= upper; ++j) {
    const std::size_t i = n + 2 - j;
    sum += binom(half, static_cast<unsigned>(i)) *
           ExactScalar(binom(static_cast<unsigned>(i), static_cast<unsigned>(j))) *
           int_pow(minus_two_h, n + 2 - 2 * j) * int_pow(disc, j);
  }
  return -sum / (2 * k);
}

std::vector<ExactScalar> mu_recur(const MomentRequest& req) {
  require_nonzero_k(req.k, "mu_recur");
  const ExactScalar& h = req.h;
  const ExactScalar disc = h * h - 4 * req.k;
  std::vector<ExactScalar> mu(req.n_max + 1);
  mu[0] = 1;
  if (req.n_max >= 1) mu[1] = h;
  for (std::size_t n = 2; n <= req.n_max; ++n) {
    const auto nn = static_cast<long>(n);
    mu[n] = (h * (2 * nn + 1) * mu[n - 1] - disc * (nn - 1) * mu[n - 2]) / (nn + 2);
  }
  return mu;
}

ExactScalar mu_lagrange(std::size_t n, const ExactScalar& h, const ExactScalar& k, MomentSign sign) {
  require_nonzero_k(k, "mu_lagrange");
  const ExactScalar s = sign == MomentSign::standard ? h : ExactScalar(-h);
  const BigInt n_fact = factorial(static_cast<unsigned>(n));
  ExactScalar sum = 0;
  for (std::size_t p = 1; p <= (n + 2) / 2; ++p) {
    const BigInt den = factorial(static_cast<unsigned>(p)) *
                       factorial(static_cast<unsigned>(n + 2 - 2 * p)) *
                       factorial(static_cast<unsigned>(p - 1));
    ExactScalar coef(n_fact, den);
    coef.canonicalize();
    sum += coef * int_pow(s, n + 2 - 2 * p) * int_pow(k, p - 1);
  }
  return sum;
}

ExactScalar mu_lagrange_multinomial(std::size_t n, const ExactScalar& h, const ExactScalar& k) {
  require_nonzero_k(k, "mu_lagrange_multinomial");
  const BigInt top = factorial(static_cast<unsigned>(n + 1));
  auto multinomial = [&](std::size_t a, std::size_t b, std::size_t c) {
    ExactScalar m(top, factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b)) *
                           factorial(static_cast<unsigned>(c)));
    m.canonicalize();
    return m;
  };
  const ExactScalar inv(1, static_cast<unsigned long>(n + 1));
  ExactScalar sum = 0;
  if (n % 2 == 1) {
    for (std::size_t j = 0; j <= (n - 1) / 2; ++j) {
      const ExactScalar a_j = inv * multinomial((n + 1) / 2 - j, 2 * j + 1, (n - 1) / 2 - j) *
                              int_pow(k, (n - 1) / 2 - j);
      sum += a_j * int_pow(h, 2 * j + 1);
    }
  } else {
    for (std::size_t j = 0; j <= n / 2; ++j) {
      const ExactScalar a_j =
          inv * multinomial(n / 2 + 1 - j, 2 * j, n / 2 - j) * int_pow(k, n / 2 - j);
      sum += a_j * int_pow(h, 2 * j);
    }
  }
  return sum;
}

std::size_t MotzkinPath::east_count() const {
  return static_cast<std::size_t>(std::count(steps.begin(), steps.end(), Step::east));
}

std::size_t MotzkinPath::south_east_count() const {
  return static_cast<std::size_t>(std::count(steps.begin(), steps.end(), Step::south_east));
}

bool MotzkinPath::is_valid() const {
  long height = 0;
  for (Step s : steps) {
    if (s == Step::north_east) ++height;
    if (s == Step::south_east) --height;
    if (height < 0) return false;
  }
  return height == 0;
}

std::string MotzkinPath::to_string() const {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out += static_cast<char>(s);
  return out;
}

std::string MotzkinPath::weight_monomial() const {
  const std::size_t e = east_count();
  const std::size_t d = south_east_count();
  auto factor = [](const char* var, std::size_t power) {
    std::string f = var;
    if (power > 1) f += "^" + std::to_string(power);
    return f;
  };
  std::string out;
  if (e > 0) out = factor("h", e);
  if (d > 0) out += (out.empty() ? "" : "*") + factor("k", d);
  return out.empty() ? "1" : out;
}

ExactScalar MotzkinPath::weight(const ExactScalar& h, const ExactScalar& k) const {
  return int_pow(h, east_count()) * int_pow(k, south_east_count());
}

namespace {

void check_bound(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw std::out_of_range("path enumeration: n = " + std::to_string(n) +
                            " exceeds the brute-force bound " + std::to_string(bound) +
                            "; use an analytic route (gf, cfrac, closed, recur, lagrange)");
  }
}

// Visits every Motzkin path, pruning prefixes that cannot return to the axis.
template <typename Visit>
void walk(std::size_t remaining, long height, std::size_t downs, Visit& visit) {
  if (remaining == 0) {
    visit(downs);
    return;
  }
  if (static_cast<std::size_t>(height) < remaining) {
    walk(remaining - 1, height, downs, visit);      // east
    if (static_cast<std::size_t>(height) + 1 < remaining)
      walk(remaining - 1, height + 1, downs, visit);  // north-east
  }
  if (height > 0) walk(remaining - 1, height - 1, downs + 1, visit);  // south-east
}

void collect(std::size_t remaining, long height, std::vector<Step>& prefix,
             std::vector<MotzkinPath>& out) {
  if (remaining == 0) {
    out.push_back(MotzkinPath{prefix});
    return;
  }
  const auto h = static_cast<std::size_t>(height);
  if (h < remaining) {
    prefix.push_back(Step::east);
    collect(remaining - 1, height, prefix, out);
    prefix.pop_back();
    if (h + 1 < remaining) {
      prefix.push_back(Step::north_east);
      collect(remaining - 1, height + 1, prefix, out);
      prefix.pop_back();
    }
  }
  if (height > 0) {
    prefix.push_back(Step::south_east);
    collect(remaining - 1, height - 1, prefix, out);
    prefix.pop_back();
  }
}

int step_rank(Step s) {
  switch (s) {
    case Step::north_east: return 0;
    case Step::south_east: return 1;
    case Step::east: return 2;
  }
  return 3;
}

}  // namespace

std::vector<std::uint64_t> motzkin_census(std::size_t n, std::size_t bound) {
  check_bound(n, bound);
  std::vector<std::uint64_t> counts(n / 2 + 1, 0);
  auto visit = [&counts](std::size_t downs) { ++counts[downs]; };
  walk(n, 0, 0, visit);
  return counts;
}

std::vector<MotzkinPath> enumerate_paths(std::size_t n, std::size_t bound) {
  check_bound(n, bound);
  std::vector<MotzkinPath> out;
  std::vector<Step> prefix;
  collect(n, 0, prefix, out);
  std::sort(out.begin(), out.end(), [](const MotzkinPath& a, const MotzkinPath& b) {
    const auto ea = a.east_count(), eb = b.east_count();
    if (ea != eb) return ea > eb;
    return std::lexicographical_compare(
        a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
        [](Step x, Step y) { return step_rank(x) < step_rank(y); });
  });
  return out;
}

ExactScalar mu_paths(std::size_t n, const ExactScalar& h, const ExactScalar& k, std::size_t bound) {
  const auto counts = motzkin_census(n, bound);
  ExactScalar sum = 0;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] == 0) continue;
    sum += ExactScalar(BigInt(static_cast<unsigned long>(counts[c]))) * int_pow(h, n - 2 * c) *
           int_pow(k, c);
  }
  return sum;
}

ExactScalar catalan(std::size_t m) {
  const auto mm = static_cast<unsigned>(m);
  return ExactScalar(binom(2 * mm + 1, mm) / (2 * mm + 1));
}

ExactScalar MomentPolynomial::coeff(std::size_t a, std::size_t c) const {
  if (a >= coeffs.size() || c >= coeffs[a].size()) return 0;
  return coeffs[a][c];
}

std::string MomentPolynomial::to_string() const {
  std::string out;
  for (std::size_t a = coeffs.size(); a-- > 0;) {
    for (std::size_t c = 0; c < coeffs[a].size(); ++c) {
      const ExactScalar& v = coeffs[a][c];
      if (sgn(v) == 0) continue;
      std::string mono;
      if (a > 0) mono = a > 1 ? "h^" + std::to_string(a) : "h";
      if (c > 0) mono += (mono.empty() ? "" : "*") + (c > 1 ? "k^" + std::to_string(c) : std::string("k"));
      const bool neg = sgn(v) < 0;
      const ExactScalar mag = abs(v);
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (mono.empty()) {
        out += catmom::to_string(mag);
      } else {
        if (mag != 1) out += catmom::to_string(mag) + "*";
        out += mono;
      }
    }
  }
  return out.empty() ? "0" : out;
}

MomentPolynomial mu_symbolic(std::size_t n) {
  const std::size_t k_points = n / 2 + 1;
  std::vector<ExactScalar> hs(n + 1), ks(k_points);
  for (std::size_t i = 0; i <= n; ++i) hs[i] = static_cast<long>(i);
  for (std::size_t j = 0; j < k_points; ++j) ks[j] = static_cast<long>(j + 1);

  // in_h[j] is mu_n(h, ks[j]) as a polynomial in h.
  std::vector<Polynomial> in_h;
  for (const auto& k : ks) {
    std::vector<ExactScalar> values;
    for (const auto& h : hs) values.push_back(mu_recur({h, k, n}).back());
    in_h.push_back(interpolate(hs, values));
  }

  MomentPolynomial result;
  result.n = n;
  result.coeffs.assign(n + 1, std::vector<ExactScalar>(k_points));
  for (std::size_t a = 0; a <= n; ++a) {
    std::vector<ExactScalar> values;
    for (const auto& p : in_h) values.push_back(p.coeff(a));
    const Polynomial in_k = interpolate(ks, values);
    if (in_k.degree() >= static_cast<long>(k_points)) {
      throw std::logic_error("mu_symbolic: interpolation exceeded expected degree");
    }
    for (std::size_t c = 0; c < k_points; ++c) result.coeffs[a][c] = in_k.coeff(c);
  }
  return result;
}

}  // namespace catmom
