#pragma once

#include <optional>
#include <vector>

#include "loggas/errors.hpp"

namespace loggas::stochastic {

struct TimeGrid {
  double t_end;
  std::size_t n_steps;

  TimeGrid(double t_end_, std::size_t n_steps_) : t_end(t_end_), n_steps(n_steps_) {
    if (!(t_end > 0.0)) throw DomainError("TimeGrid.t_end must be > 0");
    if (n_steps < 1) throw DomainError("TimeGrid.n_steps must be >= 1");
  }

  double dt() const { return t_end / double(n_steps); }
  double time(std::size_t k) const { return t_end * double(k) / double(n_steps); }
};

struct ScalarPath {
  std::vector<double> times;
  std::vector<double> values;
  std::optional<double> absorbed_at;
};

// N-particle trajectory; values[k*n_particles + i] is particle i at times[k].
struct EnsemblePath {
  std::size_t n_particles = 0;
  std::vector<double> times;
  std::vector<double> values;
  std::optional<double> collision_at;

  double at(std::size_t step, std::size_t particle) const {
    return values[step * n_particles + particle];
  }
};

}  // namespace loggas::stochastic
