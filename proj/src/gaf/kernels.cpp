#include <cmath>

#include "loggas/gaf/gaf.hpp"
#include "loggas/specfun/specfun.hpp"

namespace loggas::gaf {

using specfun::Nome;
using specfun::theta;

complex szego_disk(complex z, complex w) {
  if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
    throw DomainError("szego_disk requires |z|, |w| < 1");
  return 1.0 / (1.0 - z * std::conj(w));
}

complex bergman_disk(complex z, complex w) {
  if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
    throw DomainError("bergman_disk requires |z|, |w| < 1");
  const complex d = 1.0 - z * std::conj(w);
  return 1.0 / (d * d);
}

complex szego_disk_weighted(complex z, complex w, double r) {
  if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
    throw DomainError("szego_disk_weighted requires |z|, |w| < 1");
  const complex u = z * std::conj(w);
  return (1.0 + r * u) / ((1.0 + r) * (1.0 - u));
}

complex szego_annulus_u(complex u, complex weight, double q) {
  const Nome p(q * q);
  const double q0 = specfun::q0_const(q);
  const complex tu = theta(u, p);
  const complex tw = theta(-weight, p);
  const double pole_tol = 1e-12 * q0 * q0;
  if (std::abs(tu) < pole_tol) throw PoleError("szego_annulus_u: z conj(w) on the theta zero set");
  if (std::abs(tw) < pole_tol) throw PoleError("szego_annulus_u: weight on the theta zero set");
  return q0 * q0 * theta(-weight * u, p) / (tw * tu);
}

complex weighted_szego_annulus(complex z, complex w, const AnnulusParams& p) {
  return szego_annulus_u(z * std::conj(w), p.r, p.q);
}

complex weighted_szego_series(complex z, complex w, const AnnulusParams& p, int nmax) {
  const complex u = z * std::conj(w);
  complex sum = 1.0 / (1.0 + p.r);
  complex up = 1.0, um = 1.0;
  double qp = 1.0, qm = 1.0;
  for (int n = 1; n <= nmax; ++n) {
    up *= u;
    um /= u;
    qp *= p.q * p.q;
    qm /= p.q * p.q;
    sum += up / (1.0 + p.r * qp) + um / (1.0 + p.r * qm);
  }
  return sum;
}

complex bergman_annulus(complex z, complex w, double q, const specfun::SeriesControl& ctl) {
  ctl.validate();
  const complex u = z * std::conj(w);
  const double au = std::abs(u);
  if (!(au > q * q && au < 1.0))
    throw DomainError("bergman_annulus requires q^2 < |z conj(w)| < 1");
  complex sum = -1.0 / (2.0 * std::log(q));
  complex up = 1.0, um = 1.0;
  double q2n = 1.0;
  for (std::size_t n = 1; n <= ctl.max_terms; ++n) {
    up *= u;
    um /= u;
    q2n *= q * q;
    // n-th and (-n)-th terms of sum_{k != 0} k u^k / (1 - q^{2k})
    const complex pos = double(n) * up / (1.0 - q2n);
    const complex neg = -double(n) * um * q2n / (q2n - 1.0);
    sum += pos + neg;
    if (std::abs(pos) + std::abs(neg) < ctl.abs_tol) return sum / u;
  }
  throw SeriesDiverged("bergman_annulus: series did not converge");
}

}  // namespace loggas::gaf
