#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "loggas/gaf/gaf.hpp"
#include "loggas/simd/kernels.hpp"

namespace loggas::gaf {

std::vector<complex> companion_roots(const std::vector<complex>& coeffs) {
  std::size_t deg = coeffs.size() - 1;
  while (deg > 0 && std::abs(coeffs[deg]) == 0.0) --deg;
  if (deg == 0) return {};
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) c(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) c(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, /*computeEigenvectors=*/false);
  std::vector<complex> roots(deg);
  for (std::size_t i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()[i];
  return roots;
}

namespace {

// Starting points on circles read off the upper convex hull of
// (k, log|c_k|); the standard simultaneous-iteration initialization.
std::vector<complex> aberth_initial(const std::vector<complex>& coeffs) {
  const std::size_t deg = coeffs.size() - 1;
  std::vector<double> logc(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) {
    const double a = std::abs(coeffs[k]);
    logc[k] = a > 0.0 ? std::log(a) : -1e300;
  }
  std::vector<std::size_t> hull;  // indices of the upper hull, increasing k
  for (std::size_t k = 0; k <= deg; ++k) {
    if (logc[k] <= -1e299) continue;
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
      const double cross = (double(b) - double(a)) * (logc[k] - logc[a]) -
                           (double(k) - double(a)) * (logc[b] - logc[a]);
      if (cross >= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(k);
  }
  std::vector<complex> z;
  z.reserve(deg);
  std::size_t placed = 0;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const std::size_t k1 = hull[s], k2 = hull[s + 1];
    const double radius = std::exp((logc[k1] - logc[k2]) / (double(k2) - double(k1)));
    const std::size_t m = k2 - k1;
    for (std::size_t j = 0; j < m; ++j) {
      const double angle =
          2.0 * M_PI * (double(j) / double(m) + 0.26 * double(s)) + 0.7 + double(placed) * 1e-3;
      z.push_back(std::polar(radius, angle));
      ++placed;
    }
  }
  while (z.size() < deg) z.push_back(std::polar(1.0, 0.1 * double(z.size())));
  return z;
}

}  // namespace

std::vector<complex> aberth_roots(const std::vector<complex>& coeffs, double tol,
                                  int max_sweeps) {
  std::size_t deg = coeffs.size() - 1;
  while (deg > 0 && std::abs(coeffs[deg]) == 0.0) --deg;
  // factor out z^k: a multiple root at the origin would stall the iteration
  std::size_t lead = 0;
  while (lead < deg && std::abs(coeffs[lead]) == 0.0) ++lead;
  if (deg <= lead) return std::vector<complex>(lead, complex(0.0));
  if (lead > 0) {
    const std::vector<complex> reduced(coeffs.begin() + lead, coeffs.begin() + deg + 1);
    auto roots = aberth_roots(reduced, tol, max_sweeps);
    roots.insert(roots.end(), lead, complex(0.0));
    return roots;
  }
  if (deg == 0) return {};
  std::vector<complex> trimmed(coeffs.begin(), coeffs.begin() + deg + 1);
  auto z = aberth_initial(trimmed);

  std::vector<double> cre(deg + 1), cim(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) {
    cre[k] = trimmed[k].real();
    cim[k] = trimmed[k].imag();
  }
  const std::size_t n = deg;
  std::vector<double> re(n), im(n), pre(n), pim(n), dre(n), dim(n), sre(n), sim(n);
  for (std::size_t i = 0; i < n; ++i) {
    re[i] = z[i].real();
    im[i] = z[i].imag();
  }
  std::vector<char> done(n, 0);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    simd::poly_eval_batch(cre.data(), cim.data(), deg, re.data(), im.data(), n, pre.data(),
                          pim.data(), dre.data(), dim.data());
    simd::aberth_repulsion(re.data(), im.data(), n, sre.data(), sim.data());
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const complex p(pre[i], pim[i]);
      const complex dp(dre[i], dim[i]);
      complex w;
      if (std::abs(dp) > 0.0)
        w = p / dp;
      else
        w = complex(tol, tol);
      const complex denom = 1.0 - w * complex(sre[i], sim[i]);
      complex corr = (std::abs(denom) > 1e-290) ? w / denom : w;
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag()))
        corr = complex(0.5 * tol, 0.0);
      re[i] -= corr.real();
      im[i] -= corr.imag();
      const double scale = 1.0 + std::hypot(re[i], im[i]);
      if (std::abs(corr) < tol * scale)
        done[i] = 1;
      else
        all_done = false;
    }
    if (all_done) break;
  }
  std::size_t converged = 0;
  for (std::size_t i = 0; i < n; ++i) converged += done[i];
  if (converged + n / 100 + 1 < n)
    throw RootFindFailure("aberth_roots: simultaneous iteration stalled");
  for (std::size_t i = 0; i < n; ++i) z[i] = complex(re[i], im[i]);
  return z;
}

ZeroSet find_zeros(const GafSample& sample, double rho_lo, double rho_hi, double zero_tol) {
  if (!(sample.tail_bound < zero_tol / 10.0))
    throw TruncationInsufficient("find_zeros: tail bound too large for the requested zero_tol");
  if (!(rho_lo >= sample.rho_lo - 1e-12 && rho_hi <= sample.rho_hi + 1e-12))
    throw DomainError("find_zeros: window exceeds the certified sub-domain");

  const std::size_t deg = sample.coeffs.size() - 1;
  const auto roots =
      deg <= 256 ? companion_roots(sample.coeffs) : aberth_roots(sample.coeffs);

  ZeroSet out;
  out.rho_lo = rho_lo;
  out.rho_hi = rho_hi;
  const double margin = 1e-4;
  for (complex root : roots) {
    const double a = std::abs(root);
    if (a < rho_lo * (1.0 - margin) || a > rho_hi * (1.0 + margin)) continue;
    // Newton polish on the truncated series itself
    complex zc = root;
    bool ok = false;
    for (int it = 0; it < 40; ++it) {
      const complex f = sample.eval(zc);
      const complex df = sample.eval_derivative(zc);
      if (std::abs(df) == 0.0) break;
      const complex step = f / df;
      zc -= step;
      if (!std::isfinite(zc.real()) || !std::isfinite(zc.imag())) break;
      if (std::abs(zc) > 2.0 / std::max(1e-9, rho_lo)) break;  // ran away
      if (std::abs(step) < 1e-13 * (1.0 + std::abs(zc))) {
        ok = true;
        break;
      }
    }
    if (!ok) throw RootFindFailure("find_zeros: Newton polish diverged for a candidate root");
    const double az = std::abs(zc);
    if (az < rho_lo || az > rho_hi) continue;
    const double resid = std::abs(sample.eval(zc));
    if (resid >= zero_tol)
      throw RootFindFailure("find_zeros: polished root residual above zero_tol");
    // drop duplicates (candidates polishing into the same simple zero)
    bool dup = false;
    for (const complex& seen : out.zeros)
      if (std::abs(seen - zc) < 1e-8 * (1.0 + az)) dup = true;
    if (dup) continue;
    out.zeros.push_back(zc);
    out.residual_abs.push_back(resid);
  }
  return out;
}

long winding_count(const GafSample& sample, double rho, std::size_t boundary_samples) {
  double total = 0.0;
  complex prev = sample.eval(complex(rho, 0.0));
  if (std::abs(prev) < 1e3 * sample.tail_bound)
    throw DomainError("winding_count: boundary circle passes near a zero");
  for (std::size_t k = 1; k <= boundary_samples; ++k) {
    const double phi = 2.0 * M_PI * double(k) / double(boundary_samples);
    const complex cur = sample.eval(std::polar(rho, phi));
    if (std::abs(cur) < 1e3 * sample.tail_bound)
      throw DomainError("winding_count: boundary circle passes near a zero");
    total += std::arg(cur / prev);
    prev = cur;
  }
  return std::lround(total / (2.0 * M_PI));
}

}  // namespace loggas::gaf
