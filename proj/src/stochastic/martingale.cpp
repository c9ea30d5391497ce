#include <cmath>

#include "loggas/specfun/specfun.hpp"
#include "loggas/stochastic/processes.hpp"

namespace loggas::stochastic {

double martingale_poly(unsigned n, double t, double x) {
  if (t < 0.0) throw DomainError("martingale_poly requires t >= 0");
  if (t == 0.0) return std::pow(x, double(n));
  return std::pow(0.5 * t, 0.5 * n) * specfun::hermite_poly(n, x / std::sqrt(2.0 * t));
}

double esscher(double alpha, double t, double x) {
  return std::exp(alpha * x - 0.5 * alpha * alpha * t);
}

}  // namespace loggas::stochastic
