#pragma once

// Truncated formal power series over the rationals.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "catmom/exact.hpp"

namespace catmom {

/// A formal power series c_0 + c_1 t + ... known modulo t^order.
///
/// The order is part of the value: two series of different orders never
/// compare equal, and binary operations insist on matching orders unless the
/// caller truncates first. Nothing here silently extends a series.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;

  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order) {}

  /// Takes exactly `order` coefficients from `coeffs`, padding with zeros.
  TruncatedSeries(std::span<const ExactScalar> coeffs, std::size_t order);
  explicit TruncatedSeries(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) {}
  TruncatedSeries(std::initializer_list<ExactScalar> coeffs, std::size_t order);

  /// The series t (the indeterminate) at the given order.
  static TruncatedSeries variable(std::size_t order);
  static TruncatedSeries constant(const ExactScalar& c, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const ExactScalar& operator[](std::size_t i) const { return coeffs_[i]; }
  ExactScalar& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const ExactScalar> coeffs() const { return coeffs_; }

  /// Coefficient i, or zero when i is past the order.
  ExactScalar coeff(std::size_t i) const;

  TruncatedSeries truncate(std::size_t order) const;

  /// Multiplies by t^k (k > 0) or divides by t^-k (k < 0). Dividing requires
  /// the dropped coefficients to be zero; the order is kept.
  TruncatedSeries shift(long k) const;

  TruncatedSeries derivative() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<ExactScalar> coeffs_;
};

enum class SeriesOp { add, sub, mul };

TruncatedSeries series_arith(const TruncatedSeries& f, const TruncatedSeries& g, SeriesOp op);

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f);
TruncatedSeries operator*(const ExactScalar& c, const TruncatedSeries& f);

/// Multiplicative inverse. Throws std::domain_error("not a unit") when c_0 = 0.
TruncatedSeries reciprocal(const TruncatedSeries& f);

/// f(g(t)) by Horner's rule. g must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Square root with constant term 1, by Newton iteration. Requires c_0 = 1.
TruncatedSeries sqrt_series(const TruncatedSeries& f);

/// Compositional inverse (series reversion) by Newton iteration.
/// Requires c_0 = 0 and c_1 = 1.
TruncatedSeries comp_inverse(const TruncatedSeries& f);

/// Coefficient b_n of the inverse series of t_of_u, written as
/// sum b_n u^(n+1), by the Lagrange inversion formula in coefficient
/// extraction form: b_n = [u^n] (u / t(u))^(n+1) / (n+1).
ExactScalar lagrange_coefficient(const TruncatedSeries& t_of_u, std::size_t n);

/// Comma-separated reduced rationals.
std::string to_string(const TruncatedSeries& f);
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f);

/// Truncated product of two coefficient lists, keeping `order` terms.
/// Exposed for callers that work on raw coefficient vectors.
std::vector<ExactScalar> mul_truncated(std::span<const ExactScalar> a,
                                       std::span<const ExactScalar> b, std::size_t order);

std::string join(std::span<const ExactScalar> values, std::string_view sep = ",");

}  // namespace catmom
