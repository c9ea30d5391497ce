#include <cmath>
#include <functional>

#include "loggas/gaf/gaf.hpp"
#include "loggas/specfun/specfun.hpp"

namespace loggas::gaf {

using specfun::Nome;
using specfun::theta;

complex h_alpha_q(complex z, complex alpha, double q) {
  const Nome p(q * q);
  const complex denom = theta(std::conj(alpha) * z, p);
  const double q0 = specfun::q0_const(q);
  if (std::abs(denom) < 1e-12 * q0 * q0)
    throw PoleError("h_alpha_q: conj(alpha) z on the theta zero set");
  return z * theta(alpha / z, p) / denom;
}

complex mobius_disk(complex z, complex alpha) {
  return (z - alpha) / (1.0 - std::conj(alpha) * z);
}

complex ahlfors_map(complex z, complex alpha, double q) {
  return h_alpha_q(z, alpha, q) * h_alpha_q(z, alpha_hat(alpha, q), q) / z;
}

complex conditional_kernel(complex z, complex w, const AnnulusParams& p,
                           std::span<const complex> alphas) {
  double prod = 1.0;
  complex gz = 1.0, gw = 1.0;
  for (const complex& a : alphas) {
    prod *= std::norm(a);
    gz *= h_alpha_q(z, a, p.q);
    gw *= h_alpha_q(w, a, p.q);
  }
  return szego_annulus_u(z * std::conj(w), p.r * prod, p.q) * gz * std::conj(gw);
}

complex conditional_kernel_subtracted(complex z, complex w, const AnnulusParams& p,
                                      std::span<const complex> alphas) {
  // S^{a_1..a_n} = (S^{a_1..a_{n-1}})^{a_n}, each step a rank-one subtraction
  std::function<complex(complex, complex, std::size_t)> s =
      [&](complex zz, complex ww, std::size_t k) -> complex {
    if (k == 0) return weighted_szego_annulus(zz, ww, p);
    const complex a = alphas[k - 1];
    const complex saa = s(a, a, k - 1);
    return s(zz, ww, k - 1) - s(zz, a, k - 1) * s(a, ww, k - 1) / saa;
  };
  return s(z, w, alphas.size());
}

}  // namespace loggas::gaf
