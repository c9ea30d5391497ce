#include <Eigen/Dense>
#include <cmath>

#include "loggas/detproc/detproc.hpp"

namespace loggas::detproc {

void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  // Newton iteration on Legendre P_n; standard symmetric construction.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (double(i) + 0.75) / (double(n) + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (double(k) - 1.0) * p0) / double(k);
        p0 = p1;
        p1 = p2;
      }
      pp = double(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

namespace {

double nystrom_det(const std::function<double(SpaceTimePoint, SpaceTimePoint)>& kernel,
                   const std::vector<TestFunctionBlock>& chis, std::size_t n_nodes) {
  std::vector<double> gl_x, gl_w;
  gauss_legendre(n_nodes, gl_x, gl_w);

  std::vector<SpaceTimePoint> pts;
  std::vector<double> chi_w;  // chi(x_j) * w_j for the column scaling
  for (const auto& block : chis) {
    const double mid = 0.5 * (block.hi + block.lo);
    const double half = 0.5 * (block.hi - block.lo);
    for (std::size_t j = 0; j < n_nodes; ++j) {
      const double x = mid + half * gl_x[j];
      pts.push_back({block.t, x});
      chi_w.push_back(block.chi(x) * gl_w[j] * half);
    }
  }
  const std::size_t m = pts.size();
  Eigen::MatrixXd a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a(i, j) = (i == j ? 1.0 : 0.0) + kernel(pts[i], pts[j]) * chi_w[j];
  return a.determinant();
}

}  // namespace

double fredholm_det(const std::function<double(SpaceTimePoint, SpaceTimePoint)>& kernel,
                    const std::vector<TestFunctionBlock>& chis, const QuadratureSpec& quad) {
  if (chis.empty()) return 1.0;
  const double coarse = nystrom_det(kernel, chis, quad.nodes);
  const double fine = nystrom_det(kernel, chis, 2 * quad.nodes);
  if (std::abs(fine - coarse) > 10.0 * quad.stability_tol * std::max(1.0, std::abs(fine)))
    throw QuadratureUnstable("fredholm_det: node doubling changed the result too much");
  return fine;
}

}  // namespace loggas::detproc
