#include <cmath>

#include "loggas/sle/sle.hpp"

namespace loggas::sle {

double DriverPath::value(std::size_t i, double t) const {
  const std::size_t m = steps();
  const double s = std::clamp(t / t_end, 0.0, 1.0) * double(m);
  const std::size_t k = std::min(std::size_t(s), m - 1);
  const double frac = s - double(k);
  return (1.0 - frac) * values[k * n + i] + frac * values[(k + 1) * n + i];
}

DriverPath DriverPath::constant(const std::vector<double>& v, double t_end, std::size_t steps) {
  DriverPath d;
  d.n = v.size();
  d.t_end = t_end;
  d.values.resize((steps + 1) * d.n);
  for (std::size_t k = 0; k <= steps; ++k)
    for (std::size_t i = 0; i < d.n; ++i) d.values[k * d.n + i] = v[i];
  return d;
}

DriverPath sample_sle_driver(double kappa, double t_end, std::size_t steps,
                             stochastic::Seed seed) {
  if (!(kappa > 0.0)) throw DomainError("sample_sle_driver requires kappa > 0");
  const auto bm = stochastic::sample_bm(stochastic::TimeGrid(t_end, steps), seed, 0.0);
  DriverPath d;
  d.n = 1;
  d.t_end = t_end;
  d.values.resize(steps + 1);
  const double s = std::sqrt(kappa);
  for (std::size_t k = 0; k <= steps; ++k) d.values[k] = s * bm.values[k];
  return d;
}

DriverPath sample_interaction_driver(double kappa, double coeff, std::size_t n,
                                     const std::vector<double>& y0, double t_end,
                                     std::size_t steps, stochastic::Seed seed) {
  if (!(kappa > 0.0)) throw DomainError("driver requires kappa > 0");
  const auto path = stochastic::sample_interacting(std::sqrt(kappa), coeff, n, y0,
                                                   stochastic::TimeGrid(t_end, steps), seed,
                                                   /*stop_on_collision=*/false);
  DriverPath d;
  d.n = n;
  d.t_end = t_end;
  d.values = path.values;
  if (path.collision_at) throw CollisionError("interaction driver collided");
  return d;
}

DriverPath sample_dyson_driver(double kappa, std::size_t n, const std::vector<double>& y0,
                               double t_end, std::size_t steps, stochastic::Seed seed) {
  return sample_interaction_driver(kappa, 4.0, n, y0, t_end, steps, seed);
}

}  // namespace loggas::sle
