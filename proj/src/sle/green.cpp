#include <cmath>

#include "loggas/sle/sle.hpp"

namespace loggas::sle {

double green_halfplane(complex z, complex w) {
  if (z == w) throw CoincidentPoints("green_halfplane requires z != w");
  return std::log(std::abs(z - std::conj(w))) - std::log(std::abs(z - w));
}

double green_first_orthant(complex z, complex w) {
  if (z == w) throw CoincidentPoints("green_first_orthant requires z != w");
  return std::log(std::abs(z - std::conj(w))) + std::log(std::abs(z + std::conj(w))) -
         std::log(std::abs(z - w)) - std::log(std::abs(z + w));
}

double green_pullback(complex gz, complex gw) { return green_halfplane(gz, gw); }

double dg_dt_residual(const DriverPath& driver, complex z, complex w, double t,
                      double dt_fd) {
  FlowPoint pz, pw;
  pz.g = z;
  pw.g = w;
  const double t_minus = t - dt_fd;
  if (t_minus < 0.0) throw DomainError("dg_dt_residual: t too small for the stencil");
  advance_point(pz, driver, 0.0, t_minus, {});
  advance_point(pw, driver, 0.0, t_minus, {});
  if (pz.swallowed || pw.swallowed) throw SwallowedPoint("dg_dt_residual: point swallowed");
  const double g_minus = green_pullback(pz.g, pw.g);
  advance_point(pz, driver, t_minus, dt_fd, {});
  advance_point(pw, driver, t_minus, dt_fd, {});
  const complex gz_mid = pz.g, gw_mid = pw.g;
  advance_point(pz, driver, t, dt_fd, {});
  advance_point(pw, driver, t, dt_fd, {});
  if (pz.swallowed || pw.swallowed) throw SwallowedPoint("dg_dt_residual: point swallowed");
  const double g_plus = green_pullback(pz.g, pw.g);
  const double fd = (g_plus - g_minus) / (2.0 * dt_fd);
  double rhs = 0.0;
  for (std::size_t i = 0; i < driver.n; ++i) {
    const double y = driver.value(i, t);
    rhs -= 4.0 * (1.0 / (gz_mid - y)).imag() * (1.0 / (gw_mid - y)).imag();
  }
  return std::abs(fd - rhs);
}

}  // namespace loggas::sle
