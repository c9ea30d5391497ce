#include <cmath>

#include "loggas/detproc/detproc.hpp"
#include "loggas/specfun/specfun.hpp"

namespace loggas::detproc {

using specfun::hermite_orthonormal;

double ext_hermite_kernel(std::size_t n, double s, double x, double t, double y) {
  if (!(s > 0.0 && t > 0.0)) throw DomainError("ext_hermite_kernel requires s, t > 0");
  const double xs = x / std::sqrt(2.0 * s);
  const double yt = y / std::sqrt(2.0 * t);
  const double pre = 1.0 / std::sqrt(2.0 * s);
  const double rho = std::sqrt(t / s);
  if (s <= t) {
    double sum = 0.0, rk = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      sum += rk * hermite_orthonormal(unsigned(k), xs) * hermite_orthonormal(unsigned(k), yt);
      rk *= rho;
    }
    return pre * sum;
  }
  if (!(rho < 1.0)) throw SeriesDiverged("ext_hermite_kernel: tail ratio >= 1");
  // negative tail sum over k >= n, geometric in rho
  double sum = 0.0;
  double rk = std::pow(rho, double(n));
  const double tail_factor = 1.0 / (1.0 - rho);
  for (std::size_t k = n; k < n + 100000; ++k) {
    const double term =
        rk * hermite_orthonormal(unsigned(k), xs) * hermite_orthonormal(unsigned(k), yt);
    sum += term;
    rk *= rho;
    if (rk * tail_factor < 1e-13 * std::max(1.0, std::abs(sum))) return -pre * sum;
  }
  throw SeriesDiverged("ext_hermite_kernel: tail did not converge");
}

double hermite_kernel_equal_time(std::size_t n, double t, double x, double y) {
  if (!(t > 0.0)) throw DomainError("hermite_kernel_equal_time requires t > 0");
  const double u = x / std::sqrt(2.0 * t);
  const double v = y / std::sqrt(2.0 * t);
  if (x == y) return hermite_density(n, t, x);
  return std::sqrt(0.5 * double(n)) *
         (hermite_orthonormal(unsigned(n), u) * hermite_orthonormal(unsigned(n - 1), v) -
          hermite_orthonormal(unsigned(n - 1), u) * hermite_orthonormal(unsigned(n), v)) /
         (x - y);
}

double hermite_density(std::size_t n, double t, double x) {
  if (!(t > 0.0)) throw DomainError("hermite_density requires t > 0");
  const double u = x / std::sqrt(2.0 * t);
  const double pn = hermite_orthonormal(unsigned(n), u);
  const double pm = hermite_orthonormal(unsigned(n - 1), u);
  const double pp = hermite_orthonormal(unsigned(n + 1), u);
  return (double(n) * pn * pn - std::sqrt(double(n) * double(n + 1)) * pm * pp) /
         std::sqrt(2.0 * t);
}

double ndelta0_kernel(std::size_t n, double s, double x, double t, double y) {
  const double gauge = std::exp(-x * x / (4.0 * s)) / std::exp(-y * y / (4.0 * t));
  return gauge * ext_hermite_kernel(n, s, x, t, y);
}

}  // namespace loggas::detproc
