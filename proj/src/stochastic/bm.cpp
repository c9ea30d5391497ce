#include <cmath>

#include "loggas/specfun/specfun.hpp"
#include "loggas/stochastic/processes.hpp"

namespace loggas::stochastic {

ScalarPath sample_bm(const TimeGrid& grid, Seed seed, double x0) {
  Philox rng(seed);
  ScalarPath path;
  path.times.resize(grid.n_steps + 1);
  path.values.resize(grid.n_steps + 1);
  path.times[0] = 0.0;
  path.values[0] = x0;
  const double sd = std::sqrt(grid.dt());
  double x = x0;
  for (std::size_t k = 1; k <= grid.n_steps; ++k) {
    x += sd * rng.next_normal();
    path.times[k] = grid.time(k);
    path.values[k] = x;
  }
  return path;
}

}  // namespace loggas::stochastic
