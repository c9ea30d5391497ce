#pragma once

#include <cstddef>

// Batched inner-loop kernels for the Monte Carlo ensembles and the
// simultaneous root iteration.  Every kernel has a scalar reference and an
// AVX2 variant selected at runtime; both follow the exact same operation
// order per lane, so the variants are bit-identical (the build disables
// FP contraction).  Batch layout is structure-of-arrays:
// x[particle * lanes + lane].

namespace loggas::simd {

enum class Backend { scalar, avx2 };

// Runtime selection.  Defaults to the widest ISA the CPU supports.
Backend active_backend();
void set_backend(Backend b);           // throws Unsupported if not available
bool cpu_has_avx2();

// x[i] += dt * drift[i] + sigma * noise[i]
void em_update(double* x, const double* drift, const double* noise, double dt, double sigma,
               std::size_t n);

// out[i] = c / x[i]
void recip_drift(const double* x, double* out, double c, std::size_t n);

// Interacting-particle drift over a lane batch:
//   drift[i][l] = sum_{j != i} 1 / (x[i][l] - x[j][l])
// accumulated antisymmetrically with i<j ascending.
void pairwise_recip_drift(const double* x, double* drift, std::size_t n_particles,
                          std::size_t lanes);

// Striped 4-accumulator sum: acc[k] = sum over i with i % 4 == k.
// Callers reduce as (acc0+acc1)+(acc2+acc3) to stay order-stable.
void sum4(const double* x, std::size_t n, double acc[4]);

// Aberth repulsion terms: for every i,
//   s[i] = sum_{j != i} 1/(z_i - z_j)
// with striped accumulation over j.  skip[i] != 0 marks converged roots that
// are left untouched (their s is still produced; callers ignore it).
void aberth_repulsion(const double* re, const double* im, std::size_t n, double* sre,
                      double* sim);

// Batch Horner evaluation of a complex polynomial and its derivative at n
// points: p(z) into (pre,pim), p'(z) into (dre,dim).
void poly_eval_batch(const double* cre, const double* cim, std::size_t deg, const double* zre,
                     const double* zim, std::size_t n, double* pre, double* pim, double* dre,
                     double* dim);

namespace detail {
void em_update_scalar(double*, const double*, const double*, double, double, std::size_t);
void recip_drift_scalar(const double*, double*, double, std::size_t);
void pairwise_recip_drift_scalar(const double*, double*, std::size_t, std::size_t);
void sum4_scalar(const double*, std::size_t, double[4]);
void aberth_repulsion_scalar(const double*, const double*, std::size_t, double*, double*);
void poly_eval_batch_scalar(const double*, const double*, std::size_t, const double*,
                            const double*, std::size_t, double*, double*, double*, double*);

void em_update_avx2(double*, const double*, const double*, double, double, std::size_t);
void recip_drift_avx2(const double*, double*, double, std::size_t);
void pairwise_recip_drift_avx2(const double*, double*, std::size_t, std::size_t);
void sum4_avx2(const double*, std::size_t, double[4]);
void aberth_repulsion_avx2(const double*, const double*, std::size_t, double*, double*);
void poly_eval_batch_avx2(const double*, const double*, std::size_t, const double*,
                          const double*, std::size_t, double*, double*, double*, double*);
}  // namespace detail

}  // namespace loggas::simd
