#include "loggas/specfun/specfun.hpp"

#include <cmath>
#include <limits>

namespace loggas::specfun {

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_core(double x) {
  // x > 0; returns Gamma(x) via the reflection-free branch.
  double a = kLanczos[0];
  const double t = x + 6.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i - 1);
  return std::sqrt(2.0 * M_PI) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_pos(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_pos requires x > 0");
  if (x < 0.5) return M_PI / (std::sin(M_PI * x) * lanczos_core(1.0 - x));
  return lanczos_core(x);
}

double log_gamma_pos(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma_pos requires x > 0");
  return std::lgamma(x);
}

double hermite_poly(unsigned n, double x) {
  if (n == 0) return 1.0;
  double hm = 1.0, h = 2.0 * x;
  for (unsigned k = 1; k < n; ++k) {
    const double hp = 2.0 * x * h - 2.0 * double(k) * hm;
    hm = h;
    h = hp;
  }
  return h;
}

double hermite_orthonormal(unsigned n, double x) {
  // phi_{k+1} = x sqrt(2/(k+1)) phi_k - sqrt(k/(k+1)) phi_{k-1}; the Gaussian
  // weight is carried from phi_0, so no factorial ever materializes.
  const double phi0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return phi0;
  double pm = phi0;
  double p = std::sqrt(2.0) * x * phi0;
  for (unsigned k = 1; k < n; ++k) {
    const double pp = x * std::sqrt(2.0 / (k + 1.0)) * p - std::sqrt(double(k) / (k + 1.0)) * pm;
    pm = p;
    p = pp;
  }
  return p;
}

double modified_bessel_i(double nu, double z, const SeriesControl& ctl) {
  ctl.validate();
  if (nu < -0.5) throw DomainError("modified_bessel_i requires nu >= -1/2");
  if (z < 0.0) throw DomainError("modified_bessel_i requires z >= 0");
  if (z == 0.0) {
    if (nu > 0.0) return 0.0;
    if (nu == 0.0) return 1.0;
    return std::numeric_limits<double>::infinity();  // nu in [-1/2, 0)
  }
  const double h = 0.5 * z;
  double term = std::exp(nu * std::log(h) - log_gamma_pos(nu + 1.0));
  double sum = term;
  for (std::size_t n = 1; n <= ctl.max_terms; ++n) {
    term *= h * h / (double(n) * (double(n) + nu));
    sum += term;
    if (std::abs(term) < ctl.abs_tol * std::max(1.0, std::abs(sum))) return sum;
  }
  throw SeriesDiverged("modified_bessel_i: max_terms reached");
}

complex qpochhammer(complex a, const Nome& p, std::uint32_t n) {
  complex prod = 1.0;
  double pk = 1.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    prod *= (1.0 - a * pk);
    pk *= p.p;
  }
  return prod;
}

complex qpochhammer_inf(complex a, const Nome& p, const SeriesControl& ctl) {
  ctl.validate();
  complex prod = 1.0;
  double pk = 1.0;
  const double cutoff = ctl.abs_tol * (1.0 - p.p);
  for (std::size_t i = 0; i < ctl.max_terms; ++i) {
    prod *= (1.0 - a * pk);
    pk *= p.p;
    if (std::abs(a) * pk < cutoff) return prod;
  }
  throw SeriesDiverged("qpochhammer_inf: max_terms reached");
}

complex theta(complex z, const Nome& p, const SeriesControl& ctl) {
  if (z == complex(0.0, 0.0)) throw DomainError("theta requires z != 0");
  return qpochhammer_inf(z, p, ctl) * qpochhammer_inf(p.p / z, p, ctl);
}

complex theta2(complex z1, complex z2, const Nome& p, const SeriesControl& ctl) {
  return theta(z1, p, ctl) * theta(z2, p, ctl);
}

double theta_prime_at_1(const Nome& p, const SeriesControl& ctl) {
  const complex q = qpochhammer_inf(p.p, p, ctl);
  return -(q * q).real();
}

double q0_const(double q, const SeriesControl& ctl) {
  const Nome p(q * q);
  return qpochhammer_inf(p.p, p, ctl).real();
}

complex jordan_kronecker(complex z, complex a, double q, const SeriesControl& ctl) {
  const Nome p(q * q);
  const double q0 = q0_const(q, ctl);
  const complex tz = theta(z, p, ctl);
  const complex ta = theta(a, p, ctl);
  const double pole_tol = 1e-12 * q0 * q0;
  if (std::abs(tz) < pole_tol || std::abs(ta) < pole_tol)
    throw PoleError("jordan_kronecker: argument on the theta zero set");
  return q0 * q0 * theta(z * a, p, ctl) / (tz * ta);
}

complex jordan_kronecker_series(complex z, complex a, double q, int nmax) {
  const double p = q * q;
  complex sum = 1.0 / (1.0 - a);
  complex zp = 1.0, zm = 1.0;
  double pk = 1.0;
  for (int n = 1; n <= nmax; ++n) {
    pk *= p;
    zp *= z;
    zm /= z;
    sum += zp / (1.0 - a * pk) + zm / (1.0 - a / pk);
  }
  return sum;
}

complex weierstrass_p_multiplier(complex u, double q, const SeriesControl& ctl) {
  ctl.validate();
  const double p = q * q;
  // constant part: -1/12 + 2 sum q^{2n}/(1-q^{2n})^2
  double c = -1.0 / 12.0;
  double pk = 1.0;
  for (std::size_t n = 1; n <= ctl.max_terms; ++n) {
    pk *= p;
    const double t = 2.0 * pk / ((1.0 - pk) * (1.0 - pk));
    c += t;
    if (t < ctl.abs_tol) break;
    if (n == ctl.max_terms) throw SeriesDiverged("weierstrass_p: constant part");
  }
  const auto v = [&](complex w) -> complex {
    const complex d = 1.0 - w;
    if (std::abs(d) < 1e-13) throw PoleError("weierstrass_p: argument at a lattice point");
    return w / (d * d);
  };
  // bilateral sum of v(u q^{2n}); both tails decay geometrically for q^2 < |u| < q^{-2}
  complex s = v(u);
  complex up = u, um = u;
  for (std::size_t n = 1; n <= ctl.max_terms; ++n) {
    up *= p;
    um /= p;
    const complex tv = v(up) + v(um);
    s += tv;
    if (std::abs(tv) < ctl.abs_tol) return complex(c, 0.0) - s;
  }
  throw SeriesDiverged("weierstrass_p: bilateral sum");
}

double weierstrass_p(double phi, double q, const SeriesControl& ctl) {
  const complex u = std::polar(1.0, phi);
  return weierstrass_p_multiplier(u, q, ctl).real();
}

double p_coeff(double q, const SeriesControl& ctl) {
  ctl.validate();
  double s = 0.0, pk = 1.0;
  const double p = q * q;
  for (std::size_t n = 1; n <= ctl.max_terms; ++n) {
    pk *= p;
    const double t = pk / ((1.0 - pk) * (1.0 - pk));
    s += t;
    if (t < ctl.abs_tol) return 1.0 - 24.0 * s;
  }
  throw SeriesDiverged("p_coeff: max_terms reached");
}

double a_coeff(double q, const SeriesControl& ctl) {
  ctl.validate();
  if (!(q > 0.0 && q < 1.0)) throw DomainError("a_coeff requires q in (0,1)");
  double s = 0.0, qn = 1.0, q2n = 1.0;
  double sign = 1.0;
  const double q2 = q * q;
  for (std::size_t n = 1; n <= ctl.max_terms; ++n) {
    qn *= q;
    q2n *= q2;
    sign = -sign;
    const double t = sign * double(n) * qn / (1.0 - q2n);
    s += t;
    if (std::abs(t) < ctl.abs_tol && n > 4) return -2.0 * s + 0.5 / std::log(q);
  }
  throw SeriesDiverged("a_coeff: max_terms reached");
}

}  // namespace loggas::specfun
