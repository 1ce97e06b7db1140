#pragma once

// Second-order linear recurrences W(1, b, h, k):
//   W_0 = 1, W_1 = b, W_n = h W_{n-1} - k W_{n-2},
// and how the interpolated Invert and Binomial operators move their
// parameters.

#include <cstddef>
#include <string>

#include "catmom/exact.hpp"
#include "catmom/polynomial.hpp"
#include "catmom/series.hpp"
#include "catmom/transforms.hpp"

namespace catmom {

struct RecParams {
  ExactScalar b;
  ExactScalar h;
  ExactScalar k;

  /// F(h, k) = W(1, h, h, k).
  static RecParams fibonacci(const ExactScalar& h, const ExactScalar& k) { return {h, h, k}; }

  friend bool operator==(const RecParams&, const RecParams&) = default;
};

std::string to_string(const RecParams& p);

/// First n_terms values of W(1, b, h, k). Requires n_terms >= 1.
UnitSequence w_generate(const RecParams& p, std::size_t n_terms);

/// (1 + (b - h) t) / (1 - h t + k t^2) to the given order.
TruncatedSeries w_generating_function(const RecParams& p, std::size_t order);

/// Parameters of I^(x)(W): (b + x, h + x, (h - b) x + k).
RecParams map_invert(const RecParams& p, const ExactScalar& x);
/// Parameters of L^(y)(W): (b + y, h + 2y, y^2 + h y + k).
RecParams map_binomial(const RecParams& p, const ExactScalar& y);
/// Parameters of I^(x) o L^(y)(W) = L^(y) o I^(x)(W):
/// (b + y + x, h + x + 2y, y^2 + h y + k + (h - b) x + x y).
RecParams map_combined(const RecParams& p, const ExactScalar& x, const ExactScalar& y);

/// P_n(h, k, x) from P_{-1} = 0, P_0 = 1, P_n = (x + h) P_{n-1} - k P_{n-2}.
/// Requires n >= -1.
Polynomial p_poly(const ExactScalar& h, const ExactScalar& k, long n);

/// Whether P_{m-1}(h, k, x) divides P_{n-1}(h, k, x) exactly in Q[x].
/// Requires m, n >= 1.
bool divides(long m, long n, const ExactScalar& h, const ExactScalar& k);

/// Checks, term by term over n_terms, both
///   I^(x)(eta(W(1,b,h,k))) = eta(W(1, b-x, h-2x, x^2 - h x + k)) and
///   L^(x)(eta(W(1,b,h,k))) = eta(W(1, b-x, h-x, (b-h) x + k)).
bool eta_transport_check(const RecParams& p, const ExactScalar& x, std::size_t n_terms = 30);

}  // namespace catmom
