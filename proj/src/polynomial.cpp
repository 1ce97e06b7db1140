#include "catmom/polynomial.hpp"

#include <stdexcept>

namespace catmom {

Polynomial::Polynomial(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<ExactScalar> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::constant(const ExactScalar& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const ExactScalar& c, std::size_t degree) {
  std::vector<ExactScalar> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

ExactScalar Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ExactScalar(0);
}

ExactScalar Polynomial::operator()(const ExactScalar& x) const {
  ExactScalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const ExactScalar& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(const Polynomial& a) { return ExactScalar(-1) * a; }
Polynomial operator*(const ExactScalar& c, Polynomial p) { return p *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<ExactScalar> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  std::vector<ExactScalar> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const auto d = divisor.coeffs();
  const std::size_t dn = d.size();
  if (rem.size() < dn) return {Polynomial{}, dividend};

  std::vector<ExactScalar> quot(rem.size() - dn + 1);
  const ExactScalar lead_inv = 1 / d.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const ExactScalar q = rem[i + dn - 1] * lead_inv;
    quot[i] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= q * d[j];
  }
  rem.resize(dn - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial interpolate(std::span<const ExactScalar> xs, std::span<const ExactScalar> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences, then expand the Newton form.
  std::vector<ExactScalar> dd(ys.begin(), ys.end());
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const ExactScalar span = xs[i] - xs[i - level];
      if (sgn(span) == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  }
  Polynomial result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * Polynomial({-xs[i], ExactScalar(1)}) + Polynomial::constant(dd[i]);
  }
  return result;
}

std::string to_string(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (sgn(c[i]) == 0) continue;
    const bool negative = sgn(c[i]) < 0;
    const ExactScalar mag = abs(c[i]);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || i == 0) out += to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace catmom
