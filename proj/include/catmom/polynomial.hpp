#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "catmom/exact.hpp"

namespace catmom {

/// Dense univariate polynomial over the rationals, lowest degree first.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<ExactScalar> coeffs);
  Polynomial(std::initializer_list<ExactScalar> coeffs);

  static Polynomial constant(const ExactScalar& c);
  /// The monomial c x^degree.
  static Polynomial monomial(const ExactScalar& c, std::size_t degree);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const ExactScalar> coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  ExactScalar coeff(std::size_t i) const;

  ExactScalar operator()(const ExactScalar& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const ExactScalar& c);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<ExactScalar> coeffs_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const ExactScalar& c, Polynomial p);

/// Quotient and remainder in Q[x]. Throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
Polynomial interpolate(std::span<const ExactScalar> xs, std::span<const ExactScalar> ys);

/// Human-readable form in the given variable, highest degree first,
/// e.g. "x^2 + 2*x - 1".
std::string to_string(const Polynomial& p, std::string_view var = "x");

}  // namespace catmom
