#include <cmath>

#include "loggas/detproc/detproc.hpp"
#include "loggas/stochastic/processes.hpp"

namespace loggas::detproc {

PointConfiguration PointConfiguration::simple(std::vector<double> pts) {
  PointConfiguration c;
  c.points = std::move(pts);
  c.multiplicities.assign(c.points.size(), 1);
  c.validate();
  return c;
}

PointConfiguration PointConfiguration::multiple_origin(std::size_t n) {
  PointConfiguration c;
  c.points = {0.0};
  c.multiplicities = {n};
  c.validate();
  return c;
}

std::size_t PointConfiguration::total() const {
  std::size_t n = 0;
  for (auto m : multiplicities) n += m;
  return n;
}

bool PointConfiguration::is_simple() const {
  for (auto m : multiplicities)
    if (m != 1) return false;
  return true;
}

void PointConfiguration::validate() const {
  if (points.size() != multiplicities.size())
    throw DomainError("PointConfiguration: size mismatch");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i - 1] < points[i]))
      throw DomainError("PointConfiguration: points must be strictly increasing");
  for (auto m : multiplicities)
    if (m < 1) throw DomainError("PointConfiguration: multiplicities must be >= 1");
}

double heat_kernel(double t, double y, double x) {
  if (!(t > 0.0)) throw DomainError("heat_kernel requires t > 0");
  const double d = y - x;
  return std::exp(-d * d / (2.0 * t)) / std::sqrt(2.0 * M_PI * t);
}

complex phi_xi(const PointConfiguration& xi, double u, complex z) {
  xi.validate();
  if (!xi.is_simple()) throw Unsupported("phi_xi requires a simple configuration");
  bool found = false;
  complex prod = 1.0;
  for (double xk : xi.points) {
    if (xk == u) {
      found = true;
      continue;
    }
    prod *= (z - xk) / (u - xk);
  }
  if (!found) throw DomainError("phi_xi: u is not a point of xi");
  return prod;
}

std::vector<double> phi_coefficients(const PointConfiguration& xi, double u) {
  xi.validate();
  if (!xi.is_simple()) throw Unsupported("phi_coefficients requires a simple configuration");
  if (xi.points.size() > 30)
    throw ConfigTooLarge("phi_coefficients: N > 30 loses too much precision");
  bool found = false;
  std::vector<double> coeff{1.0};
  double denom = 1.0;
  for (double xk : xi.points) {
    if (xk == u) {
      found = true;
      continue;
    }
    denom *= (u - xk);
    // multiply the coefficient array by (z - xk)
    coeff.push_back(0.0);
    for (std::size_t k = coeff.size() - 1; k > 0; --k)
      coeff[k] = coeff[k - 1] - xk * coeff[k];
    coeff[0] *= -xk;
  }
  if (!found) throw DomainError("phi_coefficients: u is not a point of xi");
  for (auto& c : coeff) c /= denom;
  return coeff;
}

double martingale_m(const PointConfiguration& xi, double v, double t, double y) {
  if (t < 0.0) throw DomainError("martingale_m requires t >= 0");
  const auto coeff = phi_coefficients(xi, v);
  double s = 0.0;
  for (std::size_t n = 0; n < coeff.size(); ++n)
    s += coeff[n] * stochastic::martingale_poly(unsigned(n), t, y);
  return s;
}

}  // namespace loggas::detproc
