#include "loggas/simd/kernels.hpp"

// Reference kernels.  These define the semantics the AVX2 variants must
// reproduce bit for bit, including the striped accumulation order.

namespace loggas::simd::detail {

void em_update_scalar(double* x, const double* drift, const double* noise, double dt,
                      double sigma, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double a = dt * drift[i];
    const double b = sigma * noise[i];
    x[i] = (x[i] + a) + b;
  }
}

void recip_drift_scalar(const double* x, double* out, double c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = c / x[i];
}

void pairwise_recip_drift_scalar(const double* x, double* drift, std::size_t n_particles,
                                 std::size_t lanes) {
  for (std::size_t l = 0; l < n_particles * lanes; ++l) drift[l] = 0.0;
  for (std::size_t i = 0; i < n_particles; ++i) {
    for (std::size_t j = i + 1; j < n_particles; ++j) {
      const double* xi = x + i * lanes;
      const double* xj = x + j * lanes;
      double* di = drift + i * lanes;
      double* dj = drift + j * lanes;
      for (std::size_t l = 0; l < lanes; ++l) {
        const double r = 1.0 / (xi[l] - xj[l]);
        di[l] += r;
        dj[l] -= r;
      }
    }
  }
}

void sum4_scalar(const double* x, std::size_t n, double acc[4]) {
  acc[0] = acc[1] = acc[2] = acc[3] = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc[i & 3] += x[i];
}

void aberth_repulsion_scalar(const double* re, const double* im, std::size_t n, double* sre,
                             double* sim) {
  for (std::size_t i = 0; i < n; ++i) {
    double ar[4] = {0, 0, 0, 0}, ai[4] = {0, 0, 0, 0};
    const double zr = re[i], zi = im[i];
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = j & 3;
      if (j == i) continue;
      const double dr = zr - re[j];
      const double di = zi - im[j];
      const double w = 1.0 / (dr * dr + di * di);
      ar[k] += dr * w;
      ai[k] -= di * w;
    }
    sre[i] = (ar[0] + ar[1]) + (ar[2] + ar[3]);
    sim[i] = (ai[0] + ai[1]) + (ai[2] + ai[3]);
  }
}

void poly_eval_batch_scalar(const double* cre, const double* cim, std::size_t deg,
                            const double* zre, const double* zim, std::size_t n, double* pre,
                            double* pim, double* dre, double* dim) {
  for (std::size_t l = 0; l < n; ++l) {
    const double zr = zre[l], zi = zim[l];
    double br = cre[deg], bi = cim[deg];
    double dr = 0.0, di = 0.0;
    for (std::size_t k = deg; k-- > 0;) {
      // d = d*z + b
      const double ndr = (dr * zr - di * zi) + br;
      const double ndi = (dr * zi + di * zr) + bi;
      dr = ndr;
      di = ndi;
      // b = b*z + c[k]
      const double nbr = (br * zr - bi * zi) + cre[k];
      const double nbi = (br * zi + bi * zr) + cim[k];
      br = nbr;
      bi = nbi;
    }
    pre[l] = br;
    pim[l] = bi;
    dre[l] = dr;
    dim[l] = di;
  }
}

}  // namespace loggas::simd::detail
