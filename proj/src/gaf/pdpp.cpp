#include <cmath>

#include "loggas/gaf/gaf.hpp"
#include "loggas/specfun/specfun.hpp"

namespace loggas::gaf {

using specfun::Nome;
using specfun::theta;

namespace {
void check_distinct(std::span<const complex> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return;  // coincident points are legal, rho = 0
}
}  // namespace

double pdpp_corr(std::span<const complex> points, const AnnulusParams& p) {
  check_distinct(points);
  const std::size_t n = points.size();
  if (n == 0) return 1.0;
  if (n > 24) throw MatrixTooLarge("pdpp_corr: permanent limited to n <= 24");
  double prod2 = 1.0, prod4 = 1.0;
  for (const complex& z : points) {
    const double a2 = std::norm(z);
    prod2 *= a2;
    prod4 *= a2 * a2;
  }
  const Nome nome(p.q * p.q);
  const double pref =
      (theta(complex(-p.r, 0.0), nome) / theta(complex(-p.r * prod4, 0.0), nome)).real();
  std::vector<complex> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = szego_annulus_u(points[i] * std::conj(points[j]), p.r * prod2, p.q);
  return pref * perdet(m, n).real();
}

double pdpp_corr_disk(std::span<const complex> points, double r) {
  check_distinct(points);
  const std::size_t n = points.size();
  if (n == 0) return 1.0;
  if (n > 24) throw MatrixTooLarge("pdpp_corr_disk: permanent limited to n <= 24");
  double prod2 = 1.0, prod4 = 1.0;
  for (const complex& z : points) {
    const double a2 = std::norm(z);
    prod2 *= a2;
    prod4 *= a2 * a2;
  }
  const double pref = (1.0 + r) / (1.0 + r * prod4);
  std::vector<complex> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = szego_disk_weighted(points[i], points[j], r * prod2);
  return pref * perdet(m, n).real();
}

double density_annulus(complex z, const AnnulusParams& p) {
  const double a2 = std::norm(z);
  const Nome nome(p.q * p.q);
  const double q0 = specfun::q0_const(p.q);
  const double num = q0 * q0 * q0 * q0 *
                     (theta(complex(-p.r, 0.0), nome) *
                      theta(complex(-p.r * a2 * a2, 0.0), nome)).real();
  const complex den = theta(complex(-p.r * a2, 0.0), nome) * theta(complex(a2, 0.0), nome);
  return num / (den * den).real();
}

double density_disk(complex z, double r) {
  const double a2 = std::norm(z);
  const double n = (1.0 + r) * (1.0 + r * a2 * a2);
  const double d = (1.0 + r * a2) * (1.0 + r * a2) * (1.0 - a2) * (1.0 - a2);
  return n / d;
}

double unfolded_2corr(complex z, complex w, const AnnulusParams& p) {
  if (z == w) throw DomainError("unfolded_2corr requires z != w");
  const complex pts[2] = {z, w};
  return pdpp_corr(std::span<const complex>(pts, 2), p) /
         (density_annulus(z, p) * density_annulus(w, p));
}

}  // namespace loggas::gaf
