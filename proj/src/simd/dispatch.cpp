#include "loggas/errors.hpp"
#include "loggas/simd/kernels.hpp"

namespace loggas::simd {

namespace {
Backend pick_default() { return cpu_has_avx2() ? Backend::avx2 : Backend::scalar; }
Backend g_backend = pick_default();
}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() { return g_backend; }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !cpu_has_avx2())
    throw Unsupported("AVX2 backend requested on a CPU without AVX2");
  g_backend = b;
}

#define LOGGAS_DISPATCH(fn, ...)                       \
  if (g_backend == Backend::avx2) {                    \
    detail::fn##_avx2(__VA_ARGS__);                    \
  } else {                                             \
    detail::fn##_scalar(__VA_ARGS__);                  \
  }

void em_update(double* x, const double* drift, const double* noise, double dt, double sigma,
               std::size_t n) {
  LOGGAS_DISPATCH(em_update, x, drift, noise, dt, sigma, n)
}

void recip_drift(const double* x, double* out, double c, std::size_t n) {
  LOGGAS_DISPATCH(recip_drift, x, out, c, n)
}

void pairwise_recip_drift(const double* x, double* drift, std::size_t n_particles,
                          std::size_t lanes) {
  LOGGAS_DISPATCH(pairwise_recip_drift, x, drift, n_particles, lanes)
}

void sum4(const double* x, std::size_t n, double acc[4]) { LOGGAS_DISPATCH(sum4, x, n, acc) }

void aberth_repulsion(const double* re, const double* im, std::size_t n, double* sre,
                      double* sim) {
  LOGGAS_DISPATCH(aberth_repulsion, re, im, n, sre, sim)
}

void poly_eval_batch(const double* cre, const double* cim, std::size_t deg, const double* zre,
                     const double* zim, std::size_t n, double* pre, double* pim, double* dre,
                     double* dim) {
  LOGGAS_DISPATCH(poly_eval_batch, cre, cim, deg, zre, zim, n, pre, pim, dre, dim)
}

#undef LOGGAS_DISPATCH

}  // namespace loggas::simd
