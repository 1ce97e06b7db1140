#include "catmom/transforms.hpp"

#include <stdexcept>

namespace catmom {

UnitSequence::UnitSequence(std::vector<ExactScalar> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("UnitSequence: empty sequence");
  if (terms_[0] != 1) {
    throw std::invalid_argument("UnitSequence: leading term must be 1, got " + to_string(terms_[0]));
  }
}

UnitSequence::UnitSequence(std::initializer_list<ExactScalar> terms)
    : UnitSequence(std::vector<ExactScalar>(terms)) {}

UnitSequence UnitSequence::identity(std::size_t length) {
  std::vector<ExactScalar> v(length);
  v.at(0) = 1;
  return UnitSequence(std::move(v));
}

UnitSequence UnitSequence::geometric(const ExactScalar& x, std::size_t length) {
  std::vector<ExactScalar> v(length);
  ExactScalar p = 1;
  for (auto& term : v) {
    term = p;
    p *= x;
  }
  return UnitSequence(std::move(v));
}

std::string to_string(const UnitSequence& a) { return join(a.terms()); }

TruncatedSeries lambda_embed(const UnitSequence& a) {
  TruncatedSeries f(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) f[i + 1] = a[i];
  return f;
}

UnitSequence lambda_extract(const TruncatedSeries& f) {
  if (f.order() < 2 || sgn(f[0]) != 0 || f[1] != 1) {
    throw std::domain_error("lambda_extract: series is not in the lambda image (need c0 = 0, c1 = 1)");
  }
  return UnitSequence(std::vector<ExactScalar>(f.coeffs().begin() + 1, f.coeffs().end()));
}

UnitSequence bullet(const UnitSequence& a, const UnitSequence& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("bullet: length mismatch (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
  return lambda_extract(compose(lambda_embed(a), lambda_embed(b)));
}

UnitSequence eta(const UnitSequence& a) { return lambda_extract(comp_inverse(lambda_embed(a))); }

UnitSequence epsilon(const UnitSequence& a) {
  std::vector<ExactScalar> v(a.terms().begin(), a.terms().end());
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return UnitSequence(std::move(v));
}

UnitSequence gamma(const UnitSequence& a) { return eta(epsilon(a)); }

UnitSequence invert_interp(const UnitSequence& a, const ExactScalar& x) {
  const std::size_t n = a.size();
  const TruncatedSeries gf = a.generating_function();
  const TruncatedSeries denom =
      TruncatedSeries::constant(1, n) - x * gf.shift(1);
  const TruncatedSeries p = gf * reciprocal(denom);
  return UnitSequence(std::vector<ExactScalar>(p.coeffs().begin(), p.coeffs().end()));
}

UnitSequence invert_interp_group(const UnitSequence& a, const ExactScalar& x) {
  return bullet(UnitSequence::geometric(x, a.size()), a);
}

UnitSequence binomial_interp(const UnitSequence& a, const ExactScalar& y) {
  const std::size_t n = a.size();
  std::vector<ExactScalar> ypow(n);
  ypow[0] = 1;
  for (std::size_t i = 1; i < n; ++i) ypow[i] = ypow[i - 1] * y;
  std::vector<ExactScalar> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    ExactScalar acc = 0;
    for (std::size_t j = 0; j <= m; ++j) {
      if (sgn(a[j]) == 0 || sgn(ypow[m - j]) == 0) continue;
      acc += ExactScalar(binom(static_cast<unsigned>(m), static_cast<unsigned>(j))) * ypow[m - j] * a[j];
    }
    out[m] = acc;
  }
  return UnitSequence(std::move(out));
}

UnitSequence binomial_interp_group(const UnitSequence& a, const ExactScalar& y) {
  return bullet(a, UnitSequence::geometric(y, a.size()));
}

}  // namespace catmom
