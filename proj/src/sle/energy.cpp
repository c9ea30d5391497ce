#include <cmath>

#include "loggas/detproc/detproc.hpp"
#include "loggas/sle/sle.hpp"

namespace loggas::sle {

WindowQuadrature WindowQuadrature::tensor(const Window& w, std::size_t n_per_axis) {
  std::vector<double> x, wt;
  detproc::gauss_legendre(n_per_axis, x, wt);
  WindowQuadrature q;
  q.window = w;
  const double mx = 0.5 * (w.re_hi + w.re_lo), hx = 0.5 * (w.re_hi - w.re_lo);
  const double my = 0.5 * (w.im_hi + w.im_lo), hy = 0.5 * (w.im_hi - w.im_lo);
  for (std::size_t a = 0; a < n_per_axis; ++a)
    for (std::size_t b = 0; b < n_per_axis; ++b) {
      q.nodes.emplace_back(mx + hx * x[a], my + hy * x[b]);
      q.weights.push_back(wt[a] * wt[b] * hx * hy);
    }
  return q;
}

double bump(const Window& w, complex z) {
  // smooth bump exp(-1/(1-u^2)) per axis, vanishing at the window boundary
  const auto axis = [](double v, double lo, double hi) {
    const double u = 2.0 * (v - lo) / (hi - lo) - 1.0;
    if (std::abs(u) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
  };
  return axis(z.real(), w.re_lo, w.re_hi) * axis(z.imag(), w.im_lo, w.im_hi);
}

DirichletEnergy::DirichletEnergy(const WindowQuadrature& quad, std::function<double(complex)> f)
    : quad_(quad) {
  f_.resize(quad_.nodes.size());
  for (std::size_t i = 0; i < f_.size(); ++i) f_[i] = f(quad_.nodes[i]);
  // Singular part  - int int f(z) f(w) log|z-w| dmu dmu  in polar coordinates
  // around each quadrature node: d = w - z, measure rho drho dtheta, with
  // f(z + d) = 0 outside the window.
  std::vector<double> rx, rw;
  const std::size_t n_r = 48, n_th = 64;
  detproc::gauss_legendre(n_r, rx, rw);
  const double rmax = std::hypot(quad_.window.re_hi - quad_.window.re_lo,
                                 quad_.window.im_hi - quad_.window.im_lo);
  double s = 0.0;
  for (std::size_t i = 0; i < quad_.nodes.size(); ++i) {
    if (f_[i] == 0.0) continue;
    double inner = 0.0;
    for (std::size_t a = 0; a < n_r; ++a) {
      const double rho = 0.5 * rmax * (rx[a] + 1.0);
      const double wr = 0.5 * rmax * rw[a];
      double ring = 0.0;
      for (std::size_t b = 0; b < n_th; ++b) {
        const double th = 2.0 * M_PI * (double(b) + 0.5) / double(n_th);
        ring += f(quad_.nodes[i] + std::polar(rho, th));
      }
      inner += wr * (2.0 * M_PI / double(n_th)) * ring * (-std::log(rho)) * rho;
    }
    s += quad_.weights[i] * f_[i] * inner;
  }
  singular_part_ = s;
}

double DirichletEnergy::value(const std::vector<complex>& g_nodes,
                              const std::vector<complex>& log_gp_nodes) const {
  const std::size_t m = quad_.nodes.size();
  if (g_nodes.size() != m || log_gp_nodes.size() != m)
    throw DomainError("DirichletEnergy::value: node count mismatch");
  for (const complex& g : g_nodes)
    if (!(g.imag() > 1e-6)) throw StoppedDomain("DirichletEnergy: node swallowed");
  // G = log|g(z) - conj(g(w))| - log|(g(z)-g(w))/(z-w)| - log|z-w|; the last
  // term is the precomputed singular part, the rest is smooth with diagonal
  // value Re log g'.
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (f_[i] == 0.0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (f_[j] == 0.0) continue;
      double smooth = std::log(std::abs(g_nodes[i] - std::conj(g_nodes[j])));
      if (i == j)
        smooth -= log_gp_nodes[i].real();
      else
        smooth -= std::log(
            std::abs((g_nodes[i] - g_nodes[j]) / (quad_.nodes[i] - quad_.nodes[j])));
      s += quad_.weights[i] * quad_.weights[j] * f_[i] * f_[j] * smooth;
    }
  }
  return s + singular_part_;
}

double DirichletEnergy::value_identity() const {
  std::vector<complex> g = quad_.nodes;
  std::vector<complex> lgp(quad_.nodes.size(), complex(0.0));
  return value(g, lgp);
}

double DirichletEnergy::inner_h(const std::vector<double>& h_nodes) const {
  double s = 0.0;
  for (std::size_t i = 0; i < quad_.nodes.size(); ++i)
    s += quad_.weights[i] * f_[i] * h_nodes[i];
  return s;
}

}  // namespace loggas::sle
