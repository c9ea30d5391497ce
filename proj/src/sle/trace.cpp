#include <cmath>

#include "loggas/sle/sle.hpp"

namespace loggas::sle {

namespace {

constexpr double kLiftEps = 1e-6;

// Inverse of the elementary vertical-slit map with driving value u and
// capacity increment 2*dt: w -> u + sqrt((w-u)^2 - 4 dt), branch Im >= 0.
inline complex elementary_inverse(complex w, double u, double dt) {
  complex s = std::sqrt((w - u) * (w - u) - 4.0 * dt);
  if (s.imag() < 0.0) s = -s;
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw BranchError("elementary inverse map produced a non-finite value");
  return u + s;
}

}  // namespace

CurveTrace loewner_trace(const DriverPath& driver, double t_end, std::size_t n_steps) {
  if (driver.n != 1) throw DomainError("loewner_trace expects a single driver");
  const double dt = t_end / double(n_steps);
  CurveTrace trace;
  trace.times.resize(n_steps + 1);
  trace.points.resize(n_steps + 1);
  trace.times[0] = 0.0;
  trace.points[0] = complex(driver.value(0, 0.0), 0.0);
  trace.method_tol = kLiftEps;
  std::vector<double> mid(n_steps);
  for (std::size_t j = 0; j < n_steps; ++j)
    mid[j] = driver.value(0, (double(j) + 0.5) * dt);
  for (std::size_t k = 1; k <= n_steps; ++k) {
    complex w = complex(driver.value(0, double(k) * dt), kLiftEps);
    for (std::size_t j = k; j-- > 0;) w = elementary_inverse(w, mid[j], dt);
    trace.times[k] = double(k) * dt;
    trace.points[k] = w;
  }
  return trace;
}

std::vector<CurveTrace> multi_sle_trace(const DriverPath& driver, double t_end,
                                        std::size_t n_steps) {
  const std::size_t n = driver.n;
  const double dt = t_end / double(n_steps);
  // per-step frozen (midpoint) driving values
  std::vector<double> mid(n_steps * n);
  for (std::size_t j = 0; j < n_steps; ++j)
    for (std::size_t i = 0; i < n; ++i)
      mid[j * n + i] = driver.value(i, (double(j) + 0.5) * dt);

  std::vector<CurveTrace> traces(n);
  for (std::size_t i = 0; i < n; ++i) {
    traces[i].times.resize(n_steps + 1);
    traces[i].points.resize(n_steps + 1);
    traces[i].times[0] = 0.0;
    traces[i].points[0] = complex(driver.value(i, 0.0), 0.0);
    traces[i].method_tol = kLiftEps;
  }
  for (std::size_t k = 1; k <= n_steps; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      // Strang-split step: a palindrome of elementary slits, capacity dt per
      // appearance (2 dt per driver and step).  The two palindrome
      // orientations are averaged, which makes the construction exactly
      // equivariant under reflections of the driver set.
      const complex lift = complex(driver.value(i, double(k) * dt), kLiftEps);
      complex w_asc = lift, w_desc = lift;
      for (std::size_t j = k; j-- > 0;) {
        for (std::size_t idx = 0; idx < n; ++idx)
          w_asc = elementary_inverse(w_asc, mid[j * n + idx], 0.5 * dt);
        for (std::size_t idx = n; idx-- > 0;)
          w_asc = elementary_inverse(w_asc, mid[j * n + idx], 0.5 * dt);
        for (std::size_t idx = n; idx-- > 0;)
          w_desc = elementary_inverse(w_desc, mid[j * n + idx], 0.5 * dt);
        for (std::size_t idx = 0; idx < n; ++idx)
          w_desc = elementary_inverse(w_desc, mid[j * n + idx], 0.5 * dt);
      }
      traces[i].times[k] = double(k) * dt;
      traces[i].points[k] = 0.5 * (w_asc + w_desc);
    }
  }
  return traces;
}

SleSample sample_sle(double kappa, double t_end, std::size_t n_steps, stochastic::Seed seed) {
  SleSample s;
  s.driver = sample_sle_driver(kappa, t_end, n_steps, seed);
  s.trace = loewner_trace(s.driver, t_end, n_steps);
  return s;
}

bool trace_touches_real(const CurveTrace& trace, double im_eps, double t_burn) {
  for (std::size_t k = 0; k < trace.points.size(); ++k) {
    if (trace.times[k] <= t_burn) continue;
    if (trace.points[k].imag() < im_eps) return true;
  }
  return false;
}

}  // namespace loggas::sle
