#pragma once

// Floating-point side: the semicircle-type weight of the moment functional
// for k > 0, and quadrature of its moments. Nothing computed here flows
// back into the exact modules.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catmom {

class WeightSpec {
 public:
  /// Throws std::domain_error unless k > 0.
  WeightSpec(double h, double k);

  double h() const { return h_; }
  double k() const { return k_; }
  double radius() const;         // 2 sqrt(k)
  double support_lo() const { return h_ - radius(); }
  double support_hi() const { return h_ + radius(); }

 private:
  double h_;
  double k_;
};

/// omega(t) = sqrt(4k - (t - h)^2) / (2 k pi) on the open support, 0 elsewhere.
double omega(double t, const WeightSpec& spec);

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}
  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

/// Integral of t^n omega(t) over the support, by adaptive Gauss-Kronrod
/// quadrature after substituting t = h + 2 sqrt(k) sin(theta).
/// rel_tol must lie in (1e-14, 1e-2); throws QuadratureError if the error
/// estimate exceeds rel_tol * max(1, |result|).
double quad_moment(std::size_t n, const WeightSpec& spec, double rel_tol = 1e-12);

/// `samples` evenly spaced points over the closed support, endpoints included.
std::vector<std::pair<double, double>> weight_csv(const WeightSpec& spec, std::size_t samples);

/// Header "t,omega", 12 significant digits, one row per line.
void write_weight_csv(std::ostream& os, const std::vector<std::pair<double, double>>& rows);

}  // namespace catmom
