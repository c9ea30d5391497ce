#include <cmath>
#include <limits>

#include "loggas/specfun/specfun.hpp"
#include "loggas/stochastic/processes.hpp"

namespace loggas::stochastic {

double bes_density(double D, double t, double x, double y) {
  if (!(t > 0.0)) throw DomainError("bes_density requires t > 0");
  if (!(D >= 1.0)) throw DomainError("bes_density requires D >= 1");
  if (x < 0.0 || y < 0.0) throw DomainError("bes_density requires x, y >= 0");
  const double nu = 0.5 * D - 1.0;
  if (x == 0.0) {
    return std::pow(y, 2.0 * nu + 1.0) /
           (std::pow(2.0, nu) * std::pow(t, nu + 1.0) * specfun::gamma_pos(nu + 1.0)) *
           std::exp(-y * y / (2.0 * t));
  }
  if (y == 0.0) return nu > -0.5 ? 0.0 : bes_density(D, t, x, 1e-300);
  return (1.0 / t) * std::pow(y, nu + 1.0) / std::pow(x, nu) *
         std::exp(-(x * x + y * y) / (2.0 * t)) * specfun::modified_bessel_i(nu, x * y / t);
}

namespace {

// One adaptive Euler-Maruyama step from r over [0, dt].  Draws noise from
// rng; returns the new value and sets `hit` if the path reached the
// absorption threshold inside the step.
double bessel_step(double r, double dt, double c, Philox& rng, bool absorbing, bool& hit,
                   double& t_in_step) {
  constexpr int kMaxHalvings = 20;
  const double eps = bessel_absorb_eps();
  double t_local = 0.0;
  while (t_local < dt * (1.0 - 1e-12)) {
    double h = dt - t_local;
    int halves = 0;
    while (r * r <= 4.0 * h && halves < kMaxHalvings) {
      h *= 0.5;
      ++halves;
    }
    double drift = c / r;
    if (halves == kMaxHalvings && drift * h > 0.5 * r) drift = 0.5 * r / h;  // clamp
    const double dB = std::sqrt(h) * rng.next_normal();
    r = r + dB + drift * h;
    t_local += h;
    if (r <= eps) {
      if (absorbing) {
        hit = true;
        t_in_step = t_local;
        return r;
      }
      r = eps;  // D >= 2: a.s. unreachable, numeric guard only
    }
  }
  return r;
}

}  // namespace

ScalarPath sample_bessel(double D, double x0, const TimeGrid& grid, Seed seed) {
  if (!(x0 > 0.0)) throw DomainError("sample_bessel requires x0 > 0");
  Philox rng(seed);
  const double c = 0.5 * (D - 1.0);
  const bool absorbing = D < 2.0;
  ScalarPath path;
  path.times.resize(grid.n_steps + 1);
  path.values.resize(grid.n_steps + 1);
  path.times[0] = 0.0;
  path.values[0] = x0;
  double r = x0;
  for (std::size_t k = 1; k <= grid.n_steps; ++k) {
    bool hit = false;
    double t_in = 0.0;
    r = bessel_step(r, grid.dt(), c, rng, absorbing, hit, t_in);
    path.times[k] = grid.time(k);
    if (hit) {
      path.absorbed_at = grid.time(k - 1) + t_in;
      for (std::size_t m = k; m <= grid.n_steps; ++m) {
        path.times[m] = grid.time(m);
        path.values[m] = 0.0;
      }
      return path;
    }
    path.values[k] = r;
  }
  return path;
}

FlowPairResult bessel_flow_pair(double D, double x, double y, const TimeGrid& grid, Seed seed) {
  if (!(0.0 < x && x < y)) throw DomainError("bessel_flow_pair requires 0 < x < y");
  if (!(D > 1.0 && D < 2.0)) throw DomainError("bessel_flow_pair requires D in (1,2)");
  Philox rng(seed);
  const double c = 0.5 * (D - 1.0);
  const double eps = bessel_absorb_eps();
  constexpr int kMaxHalvings = 20;
  double rx = x, ry = y;
  bool x_alive = true;
  double t_x = -1.0, t_y = -1.0;
  double t = 0.0;
  const double dt = grid.dt();
  std::size_t step = 0;
  while (step < grid.n_steps && t_y < 0.0) {
    double t_local = 0.0;
    while (t_local < dt * (1.0 - 1e-12) && t_y < 0.0) {
      // shared refinement, re-derived every sub-step from the smaller radius
      const double rmin = x_alive ? rx : ry;
      double h = dt - t_local;
      int halves = 0;
      while (rmin * rmin <= 4.0 * h && halves < kMaxHalvings) {
        h *= 0.5;
        ++halves;
      }
      const double dB = std::sqrt(h) * rng.next_normal();
      if (x_alive) {
        double drift = c / rx;
        if (halves == kMaxHalvings && drift * h > 0.5 * rx) drift = 0.5 * rx / h;
        rx = rx + dB + drift * h;
      }
      {
        double drift = c / ry;
        if (ry * ry <= 4.0 * h && drift * h > 0.5 * ry) drift = 0.5 * ry / h;
        ry = ry + dB + drift * h;
      }
      t_local += h;
      t += h;
      if (x_alive && rx <= eps) {
        x_alive = false;
        t_x = t;
      }
      if (ry <= eps) {
        t_y = t;
        if (x_alive) {  // cannot happen while the flow stays ordered
          t_x = t;
          x_alive = false;
        }
      }
    }
    ++step;
  }
  // hitting times are heavy-tailed for D < 2; a trial is unresolved only if
  // neither path absorbed
  if (t_x < 0.0) throw Unresolved("bessel_flow_pair: neither path absorbed by t_end");
  if (t_y < 0.0)
    return FlowPairResult{t_x, std::numeric_limits<double>::infinity(), false};
  return FlowPairResult{t_x, t_y, std::abs(t_x - t_y) < dt};
}

}  // namespace loggas::stochastic
