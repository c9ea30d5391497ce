#pragma once

#include <complex>
#include <cstdint>

#include "loggas/specfun/series.hpp"

// Exact special functions shared by the other modules: Hermite polynomials
// and orthonormal functions, modified Bessel I_nu, q-Pochhammer symbols,
// the theta function theta(z;p) = (z;p)_inf (p/z;p)_inf, the
// Jordan-Kronecker function, the Weierstrass p-function series, and the
// lattice coefficients a(q), P(q).

namespace loggas::specfun {

using complex = std::complex<double>;

// Real gamma function for x > 0 (Lanczos, ~14 significant digits).
double gamma_pos(double x);
double log_gamma_pos(double x);

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
// H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_poly(unsigned n, double x);

// Orthonormal Hermite function phi_n(x) = H_n(x) e^{-x^2/2} / sqrt(sqrt(pi) 2^n n!).
// Evaluated by the normalized recurrence, stable for n well beyond 150.
double hermite_orthonormal(unsigned n, double x);

// Modified Bessel function of the first kind, power series with gamma terms.
// Requires nu >= -1/2, z >= 0.
double modified_bessel_i(double nu, double z, const SeriesControl& ctl = {});

// q-Pochhammer (a;p)_n.  n = finite count.
complex qpochhammer(complex a, const Nome& p, std::uint32_t n);
// (a;p)_infinity, truncated once |a p^i| < abs_tol * (1-p).
complex qpochhammer_inf(complex a, const Nome& p, const SeriesControl& ctl = {});

// theta(z;p) = (z;p)_inf (p/z;p)_inf, z != 0.
complex theta(complex z, const Nome& p, const SeriesControl& ctl = {});
// Product of theta over several arguments (shorthand used by the annulus kernels).
complex theta2(complex z1, complex z2, const Nome& p, const SeriesControl& ctl = {});

// theta'(1;p) = -(p;p)_inf^2.
double theta_prime_at_1(const Nome& p, const SeriesControl& ctl = {});

// q0 = (q^2;q^2)_inf.
double q0_const(double q, const SeriesControl& ctl = {});

// Jordan-Kronecker function, closed form q0^2 theta(za;q^2) / (theta(z;q^2) theta(a;q^2)).
// Requires z, a away from the zero set {q^{2i}} of theta(.;q^2).
complex jordan_kronecker(complex z, complex a, double q, const SeriesControl& ctl = {});
// Direct bilateral sum sum_{n in Z} z^n / (1 - a q^{2n}); test oracle, |n| <= nmax.
complex jordan_kronecker_series(complex z, complex a, double q, int nmax);

// Weierstrass p-function as the double series in the nome q (argument phi real).
double weierstrass_p(double phi, double q, const SeriesControl& ctl = {});
// Same series evaluated at the multiplier u = e^{i phi}; accepts complex u with
// q^2 < |u| < 1-ish annulus of convergence.  Used by the Bergman kernel identity.
complex weierstrass_p_multiplier(complex u, double q, const SeriesControl& ctl = {});

// P(q) = 1 - 24 sum_{n>=1} q^{2n}/(1-q^{2n})^2.
double p_coeff(double q, const SeriesControl& ctl = {});

// a(q) = -2 sum_{n>=1} (-1)^n n q^n/(1-q^{2n}) + 1/(2 log q).
double a_coeff(double q, const SeriesControl& ctl = {});

}  // namespace loggas::specfun
