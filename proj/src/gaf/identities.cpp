#include <cmath>

#include "loggas/gaf/gaf.hpp"
#include "loggas/specfun/specfun.hpp"

namespace loggas::gaf {

using specfun::Nome;
using specfun::theta;

namespace {

// d_z d_wbar of log K for a kernel K(z, w) that is holomorphic in z and in
// conj(w): 4-point central differences with real step h, Richardson-refined
// with step 2h; the differences are taken on log-ratios so no branch cut is
// crossed.
template <typename K>
complex mixed_log_derivative(const K& kernel, complex z, complex w, double h) {
  const auto stencil = [&](double hh) {
    const complex spp = kernel(z + hh, w + hh);
    const complex spm = kernel(z + hh, w - hh);
    const complex smp = kernel(z - hh, w + hh);
    const complex smm = kernel(z - hh, w - hh);
    return (std::log(spp / spm) - std::log(smp / smm)) / (4.0 * hh * hh);
  };
  return (4.0 * stencil(h) - stencil(2.0 * h)) / 3.0;
}

}  // namespace

double log_deriv_residual(complex z, complex w, const AnnulusParams& p, double h) {
  const auto kernel = [&](complex zz, complex ww) {
    return szego_annulus_u(zz * std::conj(ww), p.r, p.q);
  };
  const complex lhs = mixed_log_derivative(kernel, z, w, h);
  const complex u = z * std::conj(w);
  const Nome nome(p.q * p.q);
  const complex s_shift = szego_annulus_u(u, p.r * u, p.q);
  const complex rhs =
      theta(complex(-p.r, 0.0), nome) / theta(-p.r * u * u, nome) * s_shift * s_shift;
  return std::abs(lhs - rhs);
}

double edelman_kostlan_disk_residual(complex z, complex w, double h) {
  const auto kernel = [](complex zz, complex ww) { return szego_disk(zz, ww); };
  const complex lhs = mixed_log_derivative(kernel, z, w, h);
  const complex s = szego_disk(z, w);
  return std::abs(lhs - s * s);
}

double frobenius_residual(std::span<const complex> points, double s, double q) {
  const std::size_t n = points.size();
  if (n == 0 || n > 5) throw DomainError("frobenius_residual: n must be 1..5");
  const Nome nome(q * q);
  const double q0 = specfun::q0_const(q);

  // LHS: q0^{2n} prod_{i<j} |z_j|^2 theta(z_i/z_j) theta(conj(z_i)/conj(z_j))
  //      / prod_{i,j} theta(z_i conj(z_j))
  complex num = std::pow(q0 * q0, double(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      num *= std::norm(points[j]) * theta(points[i] / points[j], nome) *
             theta(std::conj(points[i]) / std::conj(points[j]), nome);
  complex den = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) den *= theta(points[i] * std::conj(points[j]), nome);
  const complex lhs = num / den;

  // RHS: theta(-s)/theta(-s prod |z|^2) det[S(z_i, z_j; s)]
  double prod2 = 1.0;
  for (const complex& z : points) prod2 *= std::norm(z);
  std::vector<complex> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = szego_annulus_u(points[i] * std::conj(points[j]), s, q);
  const complex rhs = theta(complex(-s, 0.0), nome) / theta(complex(-s * prod2, 0.0), nome) *
                      determinant(m, n);
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

double hammersley_density_residual(complex z, const AnnulusParams& p, double h) {
  // per[ (d_z d_wbar S^{z1})(z1,z1) ] / det[ S(z1,z1;r) ] for n = 1,
  // with the conditional kernel in the factorized form.  Richardson over
  // steps h and 2h cancels the leading h^2 truncation error.
  const complex alphas[1] = {z};
  const auto cond = [&](complex zz, complex ww) {
    return conditional_kernel(zz, ww, p, std::span<const complex>(alphas, 1));
  };
  const auto dd_at = [&](double hh) {
    return (cond(z + hh, z + hh) - cond(z + hh, z - hh) - cond(z - hh, z + hh) +
            cond(z - hh, z - hh)) /
           (4.0 * hh * hh);
  };
  const complex dd = (4.0 * dd_at(h) - dd_at(2.0 * h)) / 3.0;
  const complex s = weighted_szego_annulus(z, z, p);
  return std::abs(dd / s - density_annulus(z, p));
}

}  // namespace loggas::gaf
