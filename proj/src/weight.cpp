#include "catmom/weight.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace catmom {

WeightSpec::WeightSpec(double h, double k) : h_(h), k_(k) {
  if (!(k > 0) || !std::isfinite(k) || !std::isfinite(h)) {
    throw std::domain_error("weight: no absolutely continuous weight in scope (requires k > 0)");
  }
}

double WeightSpec::radius() const { return 2.0 * std::sqrt(k_); }

double omega(double t, const WeightSpec& spec) {
  const double d = t - spec.h();
  if (std::abs(d) >= spec.radius()) return 0.0;
  const double k = spec.k();
  return std::sqrt(4.0 * k - d * d) / (2.0 * k * std::numbers::pi);
}

double quad_moment(std::size_t n, const WeightSpec& spec, double rel_tol) {
  if (!(rel_tol > 1e-14 && rel_tol < 1e-2)) {
    throw std::invalid_argument("quad_moment: rel_tol must lie in (1e-14, 1e-2)");
  }
  const double h = spec.h();
  const double r = spec.radius();
  // dt = r cos(theta) dtheta and sqrt(4k - (t-h)^2) = r cos(theta), so the
  // weight becomes (2 / pi) cos^2(theta).
  auto integrand = [&](double theta) {
    const double c = std::cos(theta);
    const double t = h + r * std::sin(theta);
    return std::pow(t, static_cast<double>(n)) * c * c * (2.0 / std::numbers::pi);
  };
  double error = 0.0;
  constexpr unsigned max_depth = 15;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, -std::numbers::pi / 2, std::numbers::pi / 2, max_depth, rel_tol * 0.1, &error);
  if (!std::isfinite(value) || error > rel_tol * std::max(1.0, std::abs(value))) {
    throw QuadratureError("quad_moment: no convergence for n = " + std::to_string(n), value, error);
  }
  return value;
}

std::vector<std::pair<double, double>> weight_csv(const WeightSpec& spec, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("weight_csv: samples must be >= 2");
  std::vector<std::pair<double, double>> rows;
  rows.reserve(samples);
  const double lo = spec.support_lo();
  const double hi = spec.support_hi();
  const double step = (hi - lo) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = (i + 1 == samples) ? hi : lo + step * static_cast<double>(i);
    rows.emplace_back(t, omega(t, spec));
  }
  return rows;
}

void write_weight_csv(std::ostream& os, const std::vector<std::pair<double, double>>& rows) {
  os << "t,omega\n";
  char buf[64];
  for (const auto& [t, w] : rows) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", t, w);
    os << buf;
  }
}

}  // namespace catmom
