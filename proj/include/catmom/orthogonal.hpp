#pragma once

// Orthogonal polynomials attached to the moments mu(h, k), Dickson
// polynomials of the second kind, and the Catalan identity they imply.
//
// Two polynomial families appear:
//  - P_n, built with (x + h): P_n = (x + h) P_{n-1} - k P_{n-2}.
//  - Q_n, built with (x - h): Q_n = (x - h) Q_{n-1} - k Q_{n-2}.
// Under the canonical functional V[x^j] = mu_j(h, k) it is Q_n that is
// orthogonal; P_n is orthogonal for mu(-h, k). Q_n(x) = P_n(x) at -h.

#include <cstddef>
#include <mutex>
#include <vector>

#include "catmom/exact.hpp"
#include "catmom/polynomial.hpp"

namespace catmom {

/// Linear functional V with V[x^j] = mu_j(h, k). Moments are cached and the
/// cache grows on demand; extension is serialized.
class MomentFunctional {
 public:
  /// Throws std::domain_error when k = 0.
  MomentFunctional(ExactScalar h, ExactScalar k);

  const ExactScalar& h() const { return h_; }
  const ExactScalar& k() const { return k_; }

  /// mu_j(h, k).
  ExactScalar moment(std::size_t j);
  /// Ensures moments 0..degree are cached.
  void reserve(std::size_t degree);
  std::size_t cached() const;

  ExactScalar operator()(const Polynomial& p);

 private:
  ExactScalar h_;
  ExactScalar k_;
  mutable std::mutex mutex_;
  std::vector<ExactScalar> cache_;
};

/// sum_j coeff_j(p) mu_j(h, k).
ExactScalar apply_functional(MomentFunctional& v, const Polynomial& p);

/// P_n(x) = sum_l C(n - l, l) (h + x)^(n - 2l) (-k)^l.
Polynomial p_explicit(std::size_t n, const ExactScalar& h, const ExactScalar& k);

/// Coefficient of x^j in P_n:
///   sum_l C(n - l, l) C(n - 2l, j) h^(n - 2l - j) (-k)^l.
ExactScalar p_coefficient(std::size_t n, std::size_t j, const ExactScalar& h, const ExactScalar& k);

/// E_n(x, k) = sum_i C(n - i, i) (-k)^i x^(n - 2i).
Polynomial dickson_e(std::size_t n, const ExactScalar& k);

/// Q_n for the canonical functional; k must be nonzero.
Polynomial orthogonal_family(std::size_t n, const ExactScalar& h, const ExactScalar& k);

struct DeltaCheck {
  bool holds = false;
  /// The evaluated functional value, compared against delta(n, 0).
  ExactScalar value;
};

/// V_{mu(h,k)}[Q_n] = delta(n, 0).
DeltaCheck delta_relation_check(std::size_t n, const ExactScalar& h, const ExactScalar& k);

/// The double sum sum_j P_j^(n) m_j with m_j the trinomial Lagrange sum in
/// the given sign convention. With MomentSign::negated_h this is the
/// relation as usually written and equals delta(n, 0); with
/// MomentSign::standard it pairs (x + h) coefficients with mu(h, k) and
/// fails for h != 0.
DeltaCheck delta_relation_double_sum(std::size_t n, const ExactScalar& h, const ExactScalar& k,
                                     bool negated_h);

/// Left side of sum_{i=0}^m C(2m - i, i) (-k)^i k^(m - i) C_{m-i}.
ExactScalar catalan_identity(std::size_t m, const ExactScalar& k);

/// The k-free core sum_{i=0}^m C(2m - i, i) (-1)^i C_{m-i}; the full sum is
/// k^m times this.
BigInt catalan_identity_core(std::size_t m);

}  // namespace catmom
