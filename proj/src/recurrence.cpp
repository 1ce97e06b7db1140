#include "catmom/recurrence.hpp"

#include <stdexcept>

namespace catmom {

std::string to_string(const RecParams& p) {
  return "(b=" + to_string(p.b) + ", h=" + to_string(p.h) + ", k=" + to_string(p.k) + ")";
}

UnitSequence w_generate(const RecParams& p, std::size_t n_terms) {
  if (n_terms == 0) throw std::invalid_argument("w_generate: n_terms must be >= 1");
  std::vector<ExactScalar> w(n_terms);
  w[0] = 1;
  if (n_terms > 1) w[1] = p.b;
  for (std::size_t n = 2; n < n_terms; ++n) w[n] = p.h * w[n - 1] - p.k * w[n - 2];
  return UnitSequence(std::move(w));
}

TruncatedSeries w_generating_function(const RecParams& p, std::size_t order) {
  const TruncatedSeries num({ExactScalar(1), ExactScalar(p.b - p.h)}, order);
  const TruncatedSeries den({ExactScalar(1), ExactScalar(-p.h), p.k}, order);
  return num * reciprocal(den);
}

RecParams map_invert(const RecParams& p, const ExactScalar& x) {
  return {p.b + x, p.h + x, (p.h - p.b) * x + p.k};
}

RecParams map_binomial(const RecParams& p, const ExactScalar& y) {
  return {p.b + y, p.h + 2 * y, y * y + p.h * y + p.k};
}

RecParams map_combined(const RecParams& p, const ExactScalar& x, const ExactScalar& y) {
  return {p.b + y + x, p.h + x + 2 * y, y * y + p.h * y + p.k + (p.h - p.b) * x + x * y};
}

Polynomial p_poly(const ExactScalar& h, const ExactScalar& k, long n) {
  if (n < -1) throw std::invalid_argument("p_poly: index must be >= -1");
  Polynomial prev;                          // P_{-1}
  Polynomial cur = Polynomial::constant(1);  // P_0
  if (n == -1) return prev;
  const Polynomial shift({h, ExactScalar(1)});  // x + h
  for (long i = 1; i <= n; ++i) {
    Polynomial next = shift * cur - k * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool divides(long m, long n, const ExactScalar& h, const ExactScalar& k) {
  if (m < 1 || n < 1) throw std::invalid_argument("divides: m and n must be >= 1");
  const Polynomial divisor = p_poly(h, k, m - 1);
  const Polynomial dividend = p_poly(h, k, n - 1);
  return divmod(dividend, divisor).second.is_zero();
}

bool eta_transport_check(const RecParams& p, const ExactScalar& x, std::size_t n_terms) {
  const UnitSequence reverted = eta(w_generate(p, n_terms));

  const RecParams via_binomial{p.b - x, p.h - 2 * x, x * x - p.h * x + p.k};
  const bool invert_side =
      invert_interp(reverted, x) == eta(w_generate(via_binomial, n_terms));

  const RecParams via_invert{p.b - x, p.h - x, (p.b - p.h) * x + p.k};
  const bool binomial_side =
      binomial_interp(reverted, x) == eta(w_generate(via_invert, n_terms));

  return invert_side && binomial_side;
}

}  // namespace catmom
