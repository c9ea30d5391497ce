#include <cmath>

#include "loggas/gaf/gaf.hpp"

namespace loggas::gaf {

complex GafSample::eval(complex z) const {
  // split at n = 0: Horner in z for the analytic part, in 1/z for the rest
  complex pos = 0.0;
  for (int i = int(coeffs.size()) - 1; i >= n_neg; --i) pos = pos * z + coeffs[i];
  complex neg = 0.0;
  const complex zi = 1.0 / z;
  for (int i = 0; i < n_neg; ++i) neg = neg * zi + coeffs[i];
  return pos + neg * zi;
}

complex GafSample::eval_derivative(complex z) const {
  complex pos = 0.0;
  for (int i = int(coeffs.size()) - 1; i >= n_neg; --i) {
    const int n = i - n_neg;
    if (n == 0) continue;
    pos = pos * z + double(n) * coeffs[i];
  }
  complex neg = 0.0;
  const complex zi = 1.0 / z;
  for (int i = 0; i < n_neg; ++i) {
    const int n = i - n_neg;
    neg = neg * zi + double(n) * coeffs[i];
  }
  return pos + neg * zi * zi;
}

double disk_tail_bound(double r, int n_pos, double rho_hi) {
  (void)r;  // the n = 0 coefficient is not part of the tail
  return 6.0 * std::pow(rho_hi, double(n_pos) + 1.0) / (1.0 - rho_hi);
}

double annulus_tail_bound(double q, double r, int n_neg, int n_pos, double rho_lo,
                          double rho_hi) {
  const double pos = 6.0 * std::pow(rho_hi, double(n_pos) + 1.0) / (1.0 - rho_hi);
  const double ratio = q / rho_lo;
  const double neg =
      (6.0 / std::sqrt(r)) * std::pow(ratio, double(n_neg) + 1.0) / (1.0 - ratio);
  return pos + neg;
}

int disk_truncation(double r, double rho_hi, double target) {
  int n = 8;
  while (disk_tail_bound(r, n, rho_hi) >= target) {
    n += 8;
    if (n > 2'000'000) throw TruncationInsufficient("disk_truncation: window too close to 1");
  }
  return n;
}

void annulus_truncation(double q, double r, double rho_lo, double rho_hi, double target,
                        int* n_neg, int* n_pos) {
  int np = 8, nn = 8;
  while (6.0 * std::pow(rho_hi, double(np) + 1.0) / (1.0 - rho_hi) >= 0.5 * target) {
    np += 8;
    if (np > 2'000'000) throw TruncationInsufficient("annulus_truncation: rho_hi too close to 1");
  }
  const double ratio = q / rho_lo;
  while ((6.0 / std::sqrt(r)) * std::pow(ratio, double(nn) + 1.0) / (1.0 - ratio) >=
         0.5 * target) {
    nn += 8;
    if (nn > 2'000'000) throw TruncationInsufficient("annulus_truncation: rho_lo too close to q");
  }
  *n_neg = nn;
  *n_pos = np;
}

namespace {
complex standard_complex_gaussian(stochastic::Philox& rng) {
  // E|zeta|^2 = 1: real and imaginary parts are N(0, 1/2)
  const double s = 1.0 / std::sqrt(2.0);
  const double re = s * rng.next_normal();
  const double im = s * rng.next_normal();
  return {re, im};
}
}  // namespace

GafSample sample_gaf_disk(double r, int n_pos, stochastic::Seed seed, double rho_hi) {
  if (!(r >= 0.0)) throw DomainError("sample_gaf_disk requires r >= 0");
  if (!(rho_hi > 0.0 && rho_hi < 1.0)) throw DomainError("window must satisfy 0 < rho_hi < 1");
  GafSample s;
  s.annulus = false;
  s.r = r;
  s.n_neg = 0;
  s.n_pos = n_pos;
  s.rho_lo = 0.0;
  s.rho_hi = rho_hi;
  s.tail_bound = disk_tail_bound(r, n_pos, rho_hi);
  if (s.tail_bound >= 1e-10)
    throw TruncationInsufficient("sample_gaf_disk: tail bound above 1e-10 on the window");
  stochastic::Philox rng(seed);
  s.coeffs.resize(n_pos + 1);
  for (int n = 0; n <= n_pos; ++n) {
    const double scale = (n == 0) ? 1.0 / std::sqrt(1.0 + r) : 1.0;
    s.coeffs[n] = scale * standard_complex_gaussian(rng);
  }
  return s;
}

GafSample sample_gaf_annulus(const AnnulusParams& p, int n_neg, int n_pos,
                             stochastic::Seed seed, double rho_lo, double rho_hi) {
  if (!(p.q < rho_lo && rho_lo <= rho_hi && rho_hi < 1.0))
    throw DomainError("window must satisfy q < rho_lo <= rho_hi < 1");
  GafSample s;
  s.annulus = true;
  s.q = p.q;
  s.r = p.r;
  s.n_neg = n_neg;
  s.n_pos = n_pos;
  s.rho_lo = rho_lo;
  s.rho_hi = rho_hi;
  s.tail_bound = annulus_tail_bound(p.q, p.r, n_neg, n_pos, rho_lo, rho_hi);
  if (s.tail_bound >= 1e-10)
    throw TruncationInsufficient("sample_gaf_annulus: tail bound above 1e-10 on the window");
  stochastic::Philox rng(seed);
  s.coeffs.resize(n_neg + n_pos + 1);
  for (int i = 0; i < int(s.coeffs.size()); ++i) {
    const double n = double(i - n_neg);
    const double scale = 1.0 / std::sqrt(1.0 + p.r * std::pow(p.q, 2.0 * n));
    s.coeffs[i] = scale * standard_complex_gaussian(rng);
  }
  return s;
}

GafSample multiply_series(const GafSample& sample, const std::vector<complex>& factor,
                          double extra_tail) {
  GafSample out = sample;
  out.coeffs.assign(sample.coeffs.size() + factor.size() - 1, complex(0.0));
  for (std::size_t i = 0; i < sample.coeffs.size(); ++i)
    for (std::size_t j = 0; j < factor.size(); ++j) out.coeffs[i + j] += sample.coeffs[i] * factor[j];
  out.n_pos = sample.n_pos + int(factor.size()) - 1;
  out.tail_bound = sample.tail_bound + extra_tail;
  return out;
}

}  // namespace loggas::gaf
