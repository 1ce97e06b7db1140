#include "catmom/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace catmom {

namespace {

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g, const char* what) {
  if (f.order() != g.order()) {
    throw std::invalid_argument(std::string(what) + ": order mismatch (" +
                                std::to_string(f.order()) + " vs " + std::to_string(g.order()) +
                                ")");
  }
}

// Scales a rational vector to integers over a common denominator.
// Returns the denominator; `out` receives the integer numerators.
BigInt to_common_denominator(std::span<const ExactScalar> v, std::vector<BigInt>& out) {
  BigInt den = 1;
  for (const auto& x : v) {
    if (x.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  out.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (den == 1) {
      out[i] = v[i].get_num();
    } else {
      mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), v[i].get_den_mpz_t());
      out[i] *= v[i].get_num();
    }
  }
  return den;
}

}  // namespace

// Cauchy product on integer numerators. Rational arithmetic would reduce
// every partial product; here only the N final coefficients are reduced.
std::vector<ExactScalar> mul_truncated(std::span<const ExactScalar> a,
                                       std::span<const ExactScalar> b, std::size_t order) {
  a = a.first(std::min(a.size(), order));
  b = b.first(std::min(b.size(), order));
  std::vector<BigInt> ia, ib;
  const BigInt da = to_common_denominator(a, ia);
  const BigInt db = to_common_denominator(b, ib);

  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < ib.size(); ++j) {
    if (sgn(ib[j]) != 0) nz_b.push_back(j);
  }

  std::vector<BigInt> acc(order);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (sgn(ia[i]) == 0) continue;
    for (std::size_t j : nz_b) {
      if (i + j >= order) break;
      mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }

  const BigInt den = da * db;
  std::vector<ExactScalar> out(order);
  for (std::size_t n = 0; n < order; ++n) {
    if (den == 1) {
      out[n] = ExactScalar(acc[n]);
    } else {
      out[n] = ExactScalar(acc[n], den);
      out[n].canonicalize();
    }
  }
  return out;
}

TruncatedSeries::TruncatedSeries(std::span<const ExactScalar> coeffs, std::size_t order)
    : coeffs_(order) {
  std::copy_n(coeffs.begin(), std::min(order, coeffs.size()), coeffs_.begin());
}

TruncatedSeries::TruncatedSeries(std::initializer_list<ExactScalar> coeffs, std::size_t order)
    : TruncatedSeries(std::span<const ExactScalar>(coeffs.begin(), coeffs.size()), order) {}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  TruncatedSeries t(order);
  if (order > 1) t[1] = 1;
  return t;
}

TruncatedSeries TruncatedSeries::constant(const ExactScalar& c, std::size_t order) {
  TruncatedSeries s(order);
  if (order > 0) s[0] = c;
  return s;
}

ExactScalar TruncatedSeries::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ExactScalar(0);
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
  if (order > coeffs_.size()) {
    throw std::invalid_argument("truncate: cannot extend a series from order " +
                                std::to_string(coeffs_.size()) + " to " + std::to_string(order));
  }
  return TruncatedSeries(std::span<const ExactScalar>(coeffs_).first(order), order);
}

TruncatedSeries TruncatedSeries::shift(long k) const {
  const std::size_t n = coeffs_.size();
  TruncatedSeries out(n);
  if (k >= 0) {
    for (std::size_t i = 0; i + static_cast<std::size_t>(k) < n; ++i) out[i + k] = coeffs_[i];
    return out;
  }
  const auto drop = static_cast<std::size_t>(-k);
  for (std::size_t i = 0; i < std::min(drop, n); ++i) {
    if (sgn(coeffs_[i]) != 0) {
      throw std::domain_error("shift: series is not divisible by t^" + std::to_string(drop));
    }
  }
  for (std::size_t i = drop; i < n; ++i) out[i - drop] = coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries d(coeffs_.size());
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return d;
}

TruncatedSeries series_arith(const TruncatedSeries& f, const TruncatedSeries& g, SeriesOp op) {
  require_same_order(f, g, "series_arith");
  const std::size_t n = f.order();
  switch (op) {
    case SeriesOp::add: {
      TruncatedSeries r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = f[i] + g[i];
      return r;
    }
    case SeriesOp::sub: {
      TruncatedSeries r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = f[i] - g[i];
      return r;
    }
    case SeriesOp::mul:
      return TruncatedSeries(mul_truncated(f.coeffs(), g.coeffs(), n));
  }
  throw std::logic_error("series_arith: unknown op");
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  return series_arith(f, g, SeriesOp::add);
}
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  return series_arith(f, g, SeriesOp::sub);
}
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  return series_arith(f, g, SeriesOp::mul);
}

TruncatedSeries operator-(const TruncatedSeries& f) {
  TruncatedSeries r(f.order());
  for (std::size_t i = 0; i < f.order(); ++i) r[i] = -f[i];
  return r;
}

TruncatedSeries operator*(const ExactScalar& c, const TruncatedSeries& f) {
  TruncatedSeries r(f.order());
  for (std::size_t i = 0; i < f.order(); ++i) r[i] = c * f[i];
  return r;
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  const std::size_t n = f.order();
  if (n == 0) return f;
  if (sgn(f[0]) == 0) throw std::domain_error("reciprocal: not a unit (zero constant term)");
  const ExactScalar inv0 = 1 / f[0];
  TruncatedSeries g(n);
  g[0] = inv0;
  ExactScalar acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (sgn(f[i]) != 0) acc += f[i] * g[k - i];
    }
    g[k] = -acc * inv0;
  }
  return g;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "compose");
  const std::size_t n = f.order();
  if (n == 0) return f;
  if (sgn(g[0]) != 0) {
    throw std::invalid_argument("compose: composition requires zero constant term");
  }
  TruncatedSeries r = TruncatedSeries::constant(f[n - 1], n);
  for (std::size_t i = n - 1; i-- > 0;) {
    r = r * g;
    r[0] += f[i];
  }
  return r;
}

TruncatedSeries sqrt_series(const TruncatedSeries& f) {
  const std::size_t n = f.order();
  if (n == 0) return f;
  if (f[0] != 1) throw std::domain_error("sqrt_series: constant term must be 1");
  // g_{2m} = (g_m + f / g_m) / 2, doubling the number of correct terms.
  TruncatedSeries g = TruncatedSeries::constant(1, 1);
  const ExactScalar half(1, 2);
  for (std::size_t m = 1; m < n;) {
    const std::size_t m2 = std::min(2 * m, n);
    TruncatedSeries gm(g.coeffs(), m2);
    g = half * (gm + f.truncate(m2) * reciprocal(gm));
    m = m2;
  }
  return g;
}

TruncatedSeries comp_inverse(const TruncatedSeries& f) {
  const std::size_t n = f.order();
  if ((n > 0 && sgn(f[0]) != 0) || (n > 1 && f[1] != 1)) {
    throw std::domain_error("comp_inverse: requires c0 = 0 and c1 = 1");
  }
  if (n <= 2) return f;

  // Newton step g <- g - (f(g) - t) / f'(g). Powers of g are shared between
  // f(g) and f'(g).
  TruncatedSeries g = TruncatedSeries::variable(2);
  for (std::size_t m = 2; m < n;) {
    const std::size_t m2 = std::min(2 * m, n);
    TruncatedSeries gm(g.coeffs(), m2);
    TruncatedSeries fg(m2);       // f(g)
    TruncatedSeries dfg(m2);      // f'(g)
    dfg[0] = f[1];
    TruncatedSeries power = gm;   // g^j
    for (std::size_t j = 1; j < m2; ++j) {
      if (j > 1) power = power * gm;
      const ExactScalar& fj = f[j];
      if (sgn(fj) != 0) {
        for (std::size_t i = j; i < m2; ++i) fg[i] += fj * power[i];
      }
      if (j + 1 < m2 && sgn(f[j + 1]) != 0) {
        const ExactScalar c = f[j + 1] * static_cast<unsigned long>(j + 1);
        for (std::size_t i = j; i < m2; ++i) dfg[i] += c * power[i];
      }
    }
    g = gm - (fg - TruncatedSeries::variable(m2)) * reciprocal(dfg);
    m = m2;
  }
  return g;
}

ExactScalar lagrange_coefficient(const TruncatedSeries& t_of_u, std::size_t n) {
  const std::size_t order = t_of_u.order();
  if (order < n + 2) {
    throw std::invalid_argument("lagrange_coefficient: need order >= " + std::to_string(n + 2) +
                                " to extract b_" + std::to_string(n) + ", have " +
                                std::to_string(order));
  }
  if (sgn(t_of_u[0]) != 0 || t_of_u[1] != 1) {
    throw std::domain_error("lagrange_coefficient: requires c0 = 0 and c1 = 1");
  }
  // u / t(u) as a unit series, kept to n + 1 terms.
  const TruncatedSeries ratio = reciprocal(t_of_u.shift(-1).truncate(n + 1));
  TruncatedSeries result = TruncatedSeries::constant(1, n + 1);
  TruncatedSeries base = ratio;
  for (std::size_t e = n + 1; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result[n] / ExactScalar(static_cast<unsigned long>(n + 1));
}

std::string join(std::span<const ExactScalar> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

std::string to_string(const TruncatedSeries& f) { return join(f.coeffs()); }

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) { return os << to_string(f); }

}  // namespace catmom
