#pragma once

#include <cstdint>
#include <functional>

#include "loggas/stochastic/paths.hpp"
#include "loggas/stochastic/rng.hpp"

// SDE simulators: Brownian motion, Bessel processes, the interacting
// log-gas, and eigenvalues of Hermitian-matrix Brownian motion.

namespace loggas::stochastic {

// --- Brownian motion -------------------------------------------------------

ScalarPath sample_bm(const TimeGrid& grid, Seed seed, double x0);

// --- Bessel processes ------------------------------------------------------

// Transition density p_D(t, y | x); power-law branch at x = 0.
double bes_density(double D, double t, double x, double y);

inline double bessel_absorb_eps() { return 1e-8; }

// Euler-Maruyama on dR = dB + (D-1)/(2R) dt with local sub-stepping
// (step halved until R^2 > 4 dt_local, at most 20 halvings, then the drift
// is clamped).  Paths with D < 2 are marked absorbed once R <= 1e-8.
ScalarPath sample_bessel(double D, double x0, const TimeGrid& grid, Seed seed);

struct FlowPairResult {
  double t_x;
  double t_y;
  bool simultaneous;  // |t_x - t_y| < grid.dt()
};

// Two Bessel paths from 0 < x < y driven by the same Brownian increments.
// Throws Unresolved if either path survives past t_end.
FlowPairResult bessel_flow_pair(double D, double x, double y, const TimeGrid& grid, Seed seed);

// --- Interacting log-gas ---------------------------------------------------

struct DysonOptions {
  std::size_t record_stride = 1;     // keep every k-th grid time
  double multiple_point_eps = 1e-6;  // initial spread used when x0 has ties
};

// dX_i = dB_i + (beta/2) sum_{j != i} dt / (X_i - X_j).  x0 must be
// nondecreasing; exact ties are broken by a symmetric eps-perturbation
// (entrance-law approximation).  For beta < 1 a crossing stops the path and
// is recorded in collision_at.
EnsemblePath sample_dyson(double beta, std::size_t n, const std::vector<double>& x0,
                          const TimeGrid& grid, Seed seed, const DysonOptions& opt = {});

// Generic driver used by sample_dyson and the Loewner driving process:
// dY_i = sigma dB_i + c sum_{j != i} dt/(Y_i - Y_j).
EnsemblePath sample_interacting(double sigma, double c, std::size_t n,
                                const std::vector<double>& x0, const TimeGrid& grid, Seed seed,
                                bool stop_on_collision, const DysonOptions& opt = {});

// Final-time snapshot of a whole ensemble, run in lane batches on a worker
// pool.  Path `idx` uses stream seed.stream + idx, so the result is
// independent of thread count and batch layout.
struct EnsembleFinal {
  std::size_t n_particles = 0;
  std::vector<double> values;        // n_paths * n_particles
  std::vector<std::uint8_t> collided;
};
EnsembleFinal dyson_ensemble_final(double beta, std::size_t n, const std::vector<double>& x0,
                                   const TimeGrid& grid, Seed seed, std::size_t n_paths,
                                   unsigned threads);

// --- Hermitian-matrix Brownian motion --------------------------------------

// Sorted eigenvalues of the N x N Hermitian Brownian motion started from
// diag(x0), recorded at every grid time.  Matrix increments are exact
// Gaussians per step.
EnsemblePath sample_hermitian_bm_eigs(std::size_t n, const std::vector<double>& x0,
                                      const TimeGrid& grid, Seed seed);

// --- Martingale polynomials -------------------------------------------------

// m_n(t,x) = (t/2)^{n/2} H_n(x / sqrt(2t)), with m_n(0,x) = x^n.
double martingale_poly(unsigned n, double t, double x);

// Esscher martingale G_alpha(t,x) = exp(alpha x - alpha^2 t / 2).
double esscher(double alpha, double t, double x);

}  // namespace loggas::stochastic
