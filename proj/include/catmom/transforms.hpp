#pragma once

// The group of sequences with leading term 1 under the product induced by
// series composition, and the operators acting on it.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "catmom/exact.hpp"
#include "catmom/series.hpp"

namespace catmom {

/// Finite prefix a_0..a_{N-1} of a sequence with a_0 = 1.
class UnitSequence {
 public:
  /// Throws std::invalid_argument when empty or a_0 != 1.
  explicit UnitSequence(std::vector<ExactScalar> terms);
  UnitSequence(std::initializer_list<ExactScalar> terms);

  /// (1, 0, 0, ...), the group identity X(0).
  static UnitSequence identity(std::size_t length);
  /// The geometric sequence X(x) = (1, x, x^2, ...).
  static UnitSequence geometric(const ExactScalar& x, std::size_t length);

  std::size_t size() const { return terms_.size(); }
  const ExactScalar& operator[](std::size_t i) const { return terms_[i]; }
  std::span<const ExactScalar> terms() const { return terms_; }

  /// Ordinary generating function sum a_n t^n, of order size().
  TruncatedSeries generating_function() const { return TruncatedSeries(terms_); }

  friend bool operator==(const UnitSequence&, const UnitSequence&) = default;

 private:
  std::vector<ExactScalar> terms_;
};

std::string to_string(const UnitSequence& a);

/// lambda(A) = sum a_n t^(n+1), of order size() + 1.
TruncatedSeries lambda_embed(const UnitSequence& a);

/// Inverse of lambda_embed. Requires c_0 = 0 and c_1 = 1; yields order - 1 terms.
UnitSequence lambda_extract(const TruncatedSeries& f);

/// Group product A . B = lambda^-1(lambda(A) o lambda(B)). Lengths must match.
UnitSequence bullet(const UnitSequence& a, const UnitSequence& b);

/// Revert: the group inverse, via series reversion of lambda(A).
UnitSequence eta(const UnitSequence& a);

/// Alternating sign (-1)^n a_n.
UnitSequence epsilon(const UnitSequence& a);

/// gamma = eta o epsilon.
UnitSequence gamma(const UnitSequence& a);

/// Interpolated Invert from its generating function A(t) / (1 - x t A(t)).
UnitSequence invert_interp(const UnitSequence& a, const ExactScalar& x);
/// Interpolated Invert as left multiplication X(x) . A.
UnitSequence invert_interp_group(const UnitSequence& a, const ExactScalar& x);

/// Interpolated Binomial l_n = sum_j C(n,j) y^(n-j) a_j.
UnitSequence binomial_interp(const UnitSequence& a, const ExactScalar& y);
/// Interpolated Binomial as right multiplication A . X(y).
UnitSequence binomial_interp_group(const UnitSequence& a, const ExactScalar& y);

}  // namespace catmom
