#include <Eigen/Dense>
#include <cmath>

#include "loggas/stochastic/processes.hpp"

namespace loggas::stochastic {

// Eigenvalues of the Hermitian Brownian motion started from diag(x0).  Each
// of the N^2 real coordinates is an independent BM; off-diagonal entries are
// (B + i Btilde)/sqrt(2).  Increments per recorded step are exact Gaussians.
EnsemblePath sample_hermitian_bm_eigs(std::size_t n, const std::vector<double>& x0,
                                      const TimeGrid& grid, Seed seed) {
  if (x0.size() != n) throw DomainError("x0 size mismatch");
  for (std::size_t i = 1; i < n; ++i)
    if (x0[i] < x0[i - 1]) throw DomainError("x0 must be nondecreasing");
  Philox rng(seed);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = x0[i];

  EnsemblePath path;
  path.n_particles = n;
  path.times.reserve(grid.n_steps + 1);
  path.values.reserve((grid.n_steps + 1) * n);
  path.times.push_back(0.0);
  for (std::size_t i = 0; i < n; ++i) path.values.push_back(x0[i]);

  const double sd = std::sqrt(grid.dt());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
  for (std::size_t k = 1; k <= grid.n_steps; ++k) {
    for (std::size_t i = 0; i < n; ++i) m(i, i) += sd * rng.next_normal();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double re = sd * rng.next_normal() * inv_sqrt2;
        const double im = sd * rng.next_normal() * inv_sqrt2;
        m(i, j) += std::complex<double>(re, im);
        m(j, i) += std::complex<double>(re, -im);
      }
    solver.compute(m, Eigen::EigenvaluesOnly);
    path.times.push_back(grid.time(k));
    for (std::size_t i = 0; i < n; ++i) path.values.push_back(solver.eigenvalues()[i]);
  }
  return path;
}

}  // namespace loggas::stochastic
