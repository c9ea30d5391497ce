#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "loggas/errors.hpp"

// Determinantal machinery for the beta = 2 log-gas: the interpolation
// polynomials Phi, their polynomial martingales, the space-time correlation
// kernel, the extended Hermite kernel for the N delta_0 start, correlation
// determinants, and Nystrom Fredholm determinants.

namespace loggas::detproc {

using complex = std::complex<double>;

struct PointConfiguration {
  std::vector<double> points;           // strictly increasing
  std::vector<std::size_t> multiplicities;

  static PointConfiguration simple(std::vector<double> pts);
  // N coincident points at the origin.
  static PointConfiguration multiple_origin(std::size_t n);

  std::size_t total() const;
  bool is_simple() const;
  void validate() const;
};

struct SpaceTimePoint {
  double t;
  double x;
};

struct KernelMatrix {
  std::size_t size = 0;
  std::vector<double> entries;  // row-major, entries[i*size+j] = K(label_i; label_j)
  std::vector<SpaceTimePoint> labels;

  double det() const;
};

// Gaussian transition density p(t, y | x).
double heat_kernel(double t, double y, double x);

// Phi_xi^u(z) = prod_{x_k != u} (z - x_k)/(u - x_k) for a simple configuration.
complex phi_xi(const PointConfiguration& xi, double u, complex z);

// Monomial coefficients of Phi_xi^u; degree N-1.  N <= 30.
std::vector<double> phi_coefficients(const PointConfiguration& xi, double u);

// M_xi^v(t, y): Phi expanded in monomials with W^n replaced by m_n(t, y).
double martingale_m(const PointConfiguration& xi, double v, double t, double y);

// K_xi(s,x;t,y) = sum_v p(s,x|v) M_xi^v(t,y) - 1{s>t} p(s-t,x|y).
double corr_kernel(const PointConfiguration& xi, double s, double x, double t, double y);

// Extended Hermite kernel for the N delta_0 start.
double ext_hermite_kernel(std::size_t n, double s, double x, double t, double y);

// Equal-time Christoffel-Darboux forms.
double hermite_kernel_equal_time(std::size_t n, double t, double x, double y);
double hermite_density(std::size_t n, double t, double x);

// Kernel with the gauge factor restored, equal in law to corr_kernel for
// xi = N delta_0.
double ndelta0_kernel(std::size_t n, double s, double x, double t, double y);

// det[K(p_i; p_j)] over a list of space-time points; dispatches to the
// extended Hermite kernel when the configuration has a multiple origin.
double spatio_temporal_corr(const PointConfiguration& xi,
                            const std::vector<SpaceTimePoint>& points);

KernelMatrix build_kernel_matrix(const std::function<double(SpaceTimePoint, SpaceTimePoint)>& k,
                                 const std::vector<SpaceTimePoint>& points);

// --- Fredholm determinant ---------------------------------------------------

struct TestFunctionBlock {
  double t;
  double lo, hi;                          // support of chi_t
  std::function<double(double)> chi;
};

struct QuadratureSpec {
  std::size_t nodes = 64;   // Gauss-Legendre nodes per time block
  double stability_tol = 1e-8;
};

// Nystrom approximation of Det(I + K chi) over the stacked time blocks.
// Doubles the node count once; throws QuadratureUnstable if the two levels
// disagree by more than 10x the tolerance.
double fredholm_det(const std::function<double(SpaceTimePoint, SpaceTimePoint)>& kernel,
                    const std::vector<TestFunctionBlock>& chis, const QuadratureSpec& quad = {});

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace loggas::detproc
