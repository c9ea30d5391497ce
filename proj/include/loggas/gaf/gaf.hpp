#pragma once

#include <complex>
#include <span>
#include <vector>

#include "loggas/errors.hpp"
#include "loggas/specfun/series.hpp"
#include "loggas/stochastic/rng.hpp"

// Gaussian analytic functions on the disk and the annulus q < |z| < 1:
// reproducing kernels, theta-quotient conformal factors, coefficient
// sampling with certified truncation tails, zero extraction, permanents,
// and the permanental-determinantal correlation functions of the zero set.

namespace loggas::gaf {

using complex = std::complex<double>;

struct AnnulusParams {
  double q;
  double r;

  AnnulusParams(double q_, double r_) : q(q_), r(r_) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("AnnulusParams: q must be in (0,1)");
    if (!(r > 0.0)) throw DomainError("AnnulusParams: r must be > 0");
  }
};

// --- reproducing kernels ----------------------------------------------------

complex szego_disk(complex z, complex w);
complex bergman_disk(complex z, complex w);
// Weighted Hardy kernel of the disk, (1 + r z conj(w)) / ((1+r)(1 - z conj(w))).
complex szego_disk_weighted(complex z, complex w, double r);

// Weighted Szego kernel of the annulus as a function of u = z conj(w) with a
// (possibly complex) weight s: q0^2 theta(-s u) / (theta(-s) theta(u)),
// thetas at nome q^2.
complex szego_annulus_u(complex u, complex weight, double q);
complex weighted_szego_annulus(complex z, complex w, const AnnulusParams& p);
// Direct bilateral series, |n| <= nmax; test oracle.
complex weighted_szego_series(complex z, complex w, const AnnulusParams& p, int nmax);

// Bergman kernel of the annulus by its Laurent series.
complex bergman_annulus(complex z, complex w, double q,
                        const specfun::SeriesControl& ctl = {});

// --- conformal factors -------------------------------------------------------

// z theta(alpha/z; q^2) / theta(conj(alpha) z; q^2): disk-with-circular-slit map.
complex h_alpha_q(complex z, complex alpha, double q);
// Mobius factor of the disk (q -> 0 limit).
complex mobius_disk(complex z, complex alpha);
inline complex alpha_hat(complex alpha, double q) { return -q / std::conj(alpha); }
// Ahlfors map (1/z) h_alpha(z) h_alphahat(z).
complex ahlfors_map(complex z, complex alpha, double q);

// Conditional kernel with deterministic zeros at alphas: closed product form
// S(z, w; r prod |a|^2) gamma(z) conj(gamma(w)).
complex conditional_kernel(complex z, complex w, const AnnulusParams& p,
                           std::span<const complex> alphas);
// Same object built by iterated rank-one subtraction; oracle route.
complex conditional_kernel_subtracted(complex z, complex w, const AnnulusParams& p,
                                      std::span<const complex> alphas);

// --- sampling ----------------------------------------------------------------

struct GafSample {
  bool annulus = false;
  double q = 0.0;   // inner radius (annulus only)
  double r = 0.0;   // weight parameter
  int n_neg = 0;    // coefficients run over n in [-n_neg, n_pos]
  int n_pos = 0;
  std::vector<complex> coeffs;  // coeffs[i] multiplies z^{i - n_neg}
  double rho_lo = 0.0, rho_hi = 0.0;
  double tail_bound = 0.0;  // certified on rho_lo <= |z| <= rho_hi

  complex eval(complex z) const;
  complex eval_derivative(complex z) const;
};

// 6-sigma coefficient allowance over the geometric truncation tails.
double disk_tail_bound(double r, int n_pos, double rho_hi);
double annulus_tail_bound(double q, double r, int n_neg, int n_pos, double rho_lo,
                          double rho_hi);
int disk_truncation(double r, double rho_hi, double target);
void annulus_truncation(double q, double r, double rho_lo, double rho_hi, double target,
                        int* n_neg, int* n_pos);

// Throws TruncationInsufficient when the tail bound misses 1e-10 on the window.
GafSample sample_gaf_disk(double r, int n_pos, stochastic::Seed seed, double rho_hi);
GafSample sample_gaf_annulus(const AnnulusParams& p, int n_neg, int n_pos,
                             stochastic::Seed seed, double rho_lo, double rho_hi);

// Multiply a sample by an analytic factor given as a truncated power series
// (used by the planted-zero construction); the result keeps the window.
GafSample multiply_series(const GafSample& sample, const std::vector<complex>& factor,
                          double extra_tail);

// --- zero extraction ----------------------------------------------------------

struct ZeroSet {
  std::vector<complex> zeros;
  std::vector<double> residual_abs;
  double rho_lo = 0.0, rho_hi = 0.0;
};

// All roots of a complex polynomial.
std::vector<complex> companion_roots(const std::vector<complex>& coeffs);
std::vector<complex> aberth_roots(const std::vector<complex>& coeffs, double tol = 1e-13,
                                  int max_sweeps = 160);

// Roots in the window [rho_lo, rho_hi], Newton-polished on the series itself.
ZeroSet find_zeros(const GafSample& sample, double rho_lo, double rho_hi, double zero_tol);

// Argument-principle count of zeros on {|z| < rho} minus the pole order at 0;
// coarse-cell oracle for find_zeros.
long winding_count(const GafSample& sample, double rho, std::size_t boundary_samples = 4096);

// --- permanents ----------------------------------------------------------------

// Ryser's formula with Gray-code updates; n <= 24.
complex permanent(const std::vector<complex>& m, std::size_t n);
complex determinant(const std::vector<complex>& m, std::size_t n);
complex perdet(const std::vector<complex>& m, std::size_t n);

// --- PDPP correlation functions -------------------------------------------------

double pdpp_corr(std::span<const complex> points, const AnnulusParams& p);
double pdpp_corr_disk(std::span<const complex> points, double r);

// Closed-form densities with respect to m/pi.
double density_annulus(complex z, const AnnulusParams& p);
double density_disk(complex z, double r);

double unfolded_2corr(complex z, complex w, const AnnulusParams& p);

// --- identity residuals -----------------------------------------------------------

// |d_z d_wbar log S(z,w;r) - theta(-r)/theta(-r (z wbar)^2) S(z,w; r z wbar)^2|,
// derivatives by 4-point central differences with step h.
double log_deriv_residual(complex z, complex w, const AnnulusParams& p, double h = 1e-4);
// Disk analogue: |d_z d_wbar log S_D - S_D^2|.
double edelman_kostlan_disk_residual(complex z, complex w, double h = 1e-4);

// Relative residual of the elliptic Cauchy-determinant identity for n <= 5.
double frobenius_residual(std::span<const complex> points, double s, double q);

// |per[dd S^{z}] / det[S] - rho^1(z)| via the factorized conditional kernel.
double hammersley_density_residual(complex z, const AnnulusParams& p, double h = 1e-4);

}  // namespace loggas::gaf
