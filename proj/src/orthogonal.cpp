#include "catmom/orthogonal.hpp"

#include <algorithm>
#include <stdexcept>

#include "catmom/moments.hpp"

namespace catmom {

MomentFunctional::MomentFunctional(ExactScalar h, ExactScalar k) : h_(std::move(h)), k_(std::move(k)) {
  if (sgn(k_) == 0) throw std::domain_error("MomentFunctional: moment functional undefined (k = 0)");
  cache_ = {ExactScalar(1), h_};
}

void MomentFunctional::reserve(std::size_t degree) {
  std::lock_guard lock(mutex_);
  if (cache_.size() > degree) return;
  // Grow geometrically so repeated small extensions stay cheap.
  const std::size_t target = std::max(degree, 2 * cache_.size());
  cache_ = mu_recur({h_, k_, target});
}

std::size_t MomentFunctional::cached() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

ExactScalar MomentFunctional::moment(std::size_t j) {
  reserve(j);
  std::lock_guard lock(mutex_);
  return cache_[j];
}

ExactScalar MomentFunctional::operator()(const Polynomial& p) {
  if (p.is_zero()) return 0;
  reserve(static_cast<std::size_t>(p.degree()));
  std::lock_guard lock(mutex_);
  ExactScalar acc = 0;
  const auto c = p.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) != 0) acc += c[j] * cache_[j];
  }
  return acc;
}

ExactScalar apply_functional(MomentFunctional& v, const Polynomial& p) { return v(p); }

Polynomial p_explicit(std::size_t n, const ExactScalar& h, const ExactScalar& k) {
  const Polynomial shifted({h, ExactScalar(1)});
  Polynomial result;
  const ExactScalar minus_k = -k;
  for (std::size_t l = 0; 2 * l <= n; ++l) {
    Polynomial term = Polynomial::constant(1);
    for (std::size_t i = 0; i < n - 2 * l; ++i) term = term * shifted;
    const ExactScalar c = ExactScalar(binom(static_cast<unsigned>(n - l), static_cast<unsigned>(l))) *
                          pow(minus_k, static_cast<unsigned>(l));
    result += c * term;
  }
  return result;
}

ExactScalar p_coefficient(std::size_t n, std::size_t j, const ExactScalar& h, const ExactScalar& k) {
  const ExactScalar minus_k = -k;
  ExactScalar sum = 0;
  for (std::size_t l = 0; 2 * l <= n; ++l) {
    if (j > n - 2 * l) continue;  // C(n - 2l, j) = 0
    sum += ExactScalar(binom(static_cast<unsigned>(n - l), static_cast<unsigned>(l)) *
                       binom(static_cast<unsigned>(n - 2 * l), static_cast<unsigned>(j))) *
           pow(h, static_cast<unsigned>(n - 2 * l - j)) * pow(minus_k, static_cast<unsigned>(l));
  }
  return sum;
}

Polynomial dickson_e(std::size_t n, const ExactScalar& k) {
  std::vector<ExactScalar> c(n + 1);
  const ExactScalar minus_k = -k;
  for (std::size_t i = 0; 2 * i <= n; ++i) {
    c[n - 2 * i] = ExactScalar(binom(static_cast<unsigned>(n - i), static_cast<unsigned>(i))) *
                   pow(minus_k, static_cast<unsigned>(i));
  }
  return Polynomial(std::move(c));
}

Polynomial orthogonal_family(std::size_t n, const ExactScalar& h, const ExactScalar& k) {
  if (sgn(k) == 0) throw std::domain_error("orthogonal_family: moment functional undefined (k = 0)");
  Polynomial prev;
  Polynomial cur = Polynomial::constant(1);
  const Polynomial linear({ExactScalar(-h), ExactScalar(1)});  // x - h
  for (std::size_t i = 1; i <= n; ++i) {
    Polynomial next = linear * cur - k * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

DeltaCheck delta_relation_check(std::size_t n, const ExactScalar& h, const ExactScalar& k) {
  MomentFunctional v(h, k);
  DeltaCheck out;
  out.value = v(orthogonal_family(n, h, k));
  out.holds = out.value == (n == 0 ? 1 : 0);
  return out;
}

DeltaCheck delta_relation_double_sum(std::size_t n, const ExactScalar& h, const ExactScalar& k,
                                     bool negated_h) {
  const MomentSign sign = negated_h ? MomentSign::negated_h : MomentSign::standard;
  DeltaCheck out;
  out.value = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    out.value += p_coefficient(n, j, h, k) * mu_lagrange(j, h, k, sign);
  }
  out.holds = out.value == (n == 0 ? 1 : 0);
  return out;
}

ExactScalar catalan_identity(std::size_t m, const ExactScalar& k) {
  const ExactScalar minus_k = -k;
  ExactScalar sum = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    sum += ExactScalar(binom(static_cast<unsigned>(2 * m - i), static_cast<unsigned>(i))) *
           pow(minus_k, static_cast<unsigned>(i)) * pow(k, static_cast<unsigned>(m - i)) *
           catalan(m - i);
  }
  return sum;
}

BigInt catalan_identity_core(std::size_t m) {
  BigInt sum = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    BigInt term = binom(static_cast<unsigned>(2 * m - i), static_cast<unsigned>(i)) *
                  catalan(m - i).get_num();
    if (i % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace catmom
