#include "loggas/simd/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

// AVX2 variants.  Operation order per lane matches the scalar reference
// exactly; no FMA is used so results stay bit-identical.

namespace loggas::simd::detail {

#if defined(__AVX2__)

void em_update_avx2(double* x, const double* drift, const double* noise, double dt, double sigma,
                    std::size_t n) {
  const __m256d vdt = _mm256_set1_pd(dt);
  const __m256d vsg = _mm256_set1_pd(sigma);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_mul_pd(vdt, _mm256_loadu_pd(drift + i));
    const __m256d b = _mm256_mul_pd(vsg, _mm256_loadu_pd(noise + i));
    __m256d v = _mm256_loadu_pd(x + i);
    v = _mm256_add_pd(_mm256_add_pd(v, a), b);
    _mm256_storeu_pd(x + i, v);
  }
  em_update_scalar(x + i, drift + i, noise + i, dt, sigma, n - i);
}

void recip_drift_avx2(const double* x, double* out, double c, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_div_pd(vc, _mm256_loadu_pd(x + i)));
  recip_drift_scalar(x + i, out + i, c, n - i);
}

void pairwise_recip_drift_avx2(const double* x, double* drift, std::size_t n_particles,
                               std::size_t lanes) {
  for (std::size_t l = 0; l < n_particles * lanes; ++l) drift[l] = 0.0;
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < n_particles; ++i) {
    for (std::size_t j = i + 1; j < n_particles; ++j) {
      const double* xi = x + i * lanes;
      const double* xj = x + j * lanes;
      double* di = drift + i * lanes;
      double* dj = drift + j * lanes;
      std::size_t l = 0;
      for (; l + 4 <= lanes; l += 4) {
        const __m256d r =
            _mm256_div_pd(one, _mm256_sub_pd(_mm256_loadu_pd(xi + l), _mm256_loadu_pd(xj + l)));
        _mm256_storeu_pd(di + l, _mm256_add_pd(_mm256_loadu_pd(di + l), r));
        _mm256_storeu_pd(dj + l, _mm256_sub_pd(_mm256_loadu_pd(dj + l), r));
      }
      for (; l < lanes; ++l) {
        const double r = 1.0 / (xi[l] - xj[l]);
        di[l] += r;
        dj[l] -= r;
      }
    }
  }
}

void sum4_avx2(const double* x, std::size_t n, double acc[4]) {
  __m256d v = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) v = _mm256_add_pd(v, _mm256_loadu_pd(x + i));
  _mm256_storeu_pd(acc, v);
  for (; i < n; ++i) acc[i & 3] += x[i];
}

void aberth_repulsion_avx2(const double* re, const double* im, std::size_t n, double* sre,
                           double* sim) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d ramp = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    __m256d ar = _mm256_setzero_pd(), ai = _mm256_setzero_pd();
    const __m256d zr = _mm256_set1_pd(re[i]);
    const __m256d zi = _mm256_set1_pd(im[i]);
    const __m256d vi = _mm256_set1_pd(double(i));
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      const __m256d idx = _mm256_add_pd(_mm256_set1_pd(double(j)), ramp);
      const __m256d self = _mm256_cmp_pd(idx, vi, _CMP_EQ_OQ);
      const __m256d dr = _mm256_sub_pd(zr, _mm256_loadu_pd(re + j));
      const __m256d di = _mm256_sub_pd(zi, _mm256_loadu_pd(im + j));
      const __m256d w =
          _mm256_div_pd(one, _mm256_add_pd(_mm256_mul_pd(dr, dr), _mm256_mul_pd(di, di)));
      // the self lane is 0/0 = NaN; clear it before accumulating
      const __m256d tr = _mm256_andnot_pd(self, _mm256_mul_pd(dr, w));
      const __m256d ti = _mm256_andnot_pd(self, _mm256_mul_pd(di, w));
      ar = _mm256_add_pd(ar, tr);
      ai = _mm256_sub_pd(ai, ti);
    }
    double arr[4], aii[4];
    _mm256_storeu_pd(arr, ar);
    _mm256_storeu_pd(aii, ai);
    for (; j < n; ++j) {
      const std::size_t k = j & 3;
      if (j == i) continue;
      const double dr = re[i] - re[j];
      const double di = im[i] - im[j];
      const double w = 1.0 / (dr * dr + di * di);
      arr[k] += dr * w;
      aii[k] -= di * w;
    }
    sre[i] = (arr[0] + arr[1]) + (arr[2] + arr[3]);
    sim[i] = (aii[0] + aii[1]) + (aii[2] + aii[3]);
  }
}

void poly_eval_batch_avx2(const double* cre, const double* cim, std::size_t deg,
                          const double* zre, const double* zim, std::size_t n, double* pre,
                          double* pim, double* dre, double* dim) {
  std::size_t l = 0;
  for (; l + 4 <= n; l += 4) {
    const __m256d zr = _mm256_loadu_pd(zre + l);
    const __m256d zi = _mm256_loadu_pd(zim + l);
    __m256d br = _mm256_set1_pd(cre[deg]);
    __m256d bi = _mm256_set1_pd(cim[deg]);
    __m256d dr = _mm256_setzero_pd();
    __m256d di = _mm256_setzero_pd();
    for (std::size_t k = deg; k-- > 0;) {
      const __m256d ndr =
          _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(dr, zr), _mm256_mul_pd(di, zi)), br);
      const __m256d ndi =
          _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dr, zi), _mm256_mul_pd(di, zr)), bi);
      dr = ndr;
      di = ndi;
      const __m256d nbr = _mm256_add_pd(
          _mm256_sub_pd(_mm256_mul_pd(br, zr), _mm256_mul_pd(bi, zi)), _mm256_set1_pd(cre[k]));
      const __m256d nbi = _mm256_add_pd(
          _mm256_add_pd(_mm256_mul_pd(br, zi), _mm256_mul_pd(bi, zr)), _mm256_set1_pd(cim[k]));
      br = nbr;
      bi = nbi;
    }
    _mm256_storeu_pd(pre + l, br);
    _mm256_storeu_pd(pim + l, bi);
    _mm256_storeu_pd(dre + l, dr);
    _mm256_storeu_pd(dim + l, di);
  }
  poly_eval_batch_scalar(cre, cim, deg, zre + l, zim + l, n - l, pre + l, pim + l, dre + l,
                         dim + l);
}

#else  // !__AVX2__: forward to the reference so the TU still links

void em_update_avx2(double* x, const double* d, const double* z, double a, double b,
                    std::size_t n) {
  em_update_scalar(x, d, z, a, b, n);
}
void recip_drift_avx2(const double* x, double* o, double c, std::size_t n) {
  recip_drift_scalar(x, o, c, n);
}
void pairwise_recip_drift_avx2(const double* x, double* d, std::size_t np, std::size_t l) {
  pairwise_recip_drift_scalar(x, d, np, l);
}
void sum4_avx2(const double* x, std::size_t n, double a[4]) { sum4_scalar(x, n, a); }
void aberth_repulsion_avx2(const double* r, const double* i, std::size_t n, double* sr,
                           double* si) {
  aberth_repulsion_scalar(r, i, n, sr, si);
}
void poly_eval_batch_avx2(const double* cr, const double* ci, std::size_t d, const double* zr,
                          const double* zi, std::size_t n, double* pr, double* pi, double* dr,
                          double* di) {
  poly_eval_batch_scalar(cr, ci, d, zr, zi, n, pr, pi, dr, di);
}

#endif

}  // namespace loggas::simd::detail
