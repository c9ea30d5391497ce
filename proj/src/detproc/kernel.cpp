#include <Eigen/Dense>
#include <cmath>

#include "loggas/detproc/detproc.hpp"

namespace loggas::detproc {

double KernelMatrix::det() const {
  Eigen::MatrixXd m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = entries[i * size + j];
  return m.determinant();
}

double corr_kernel(const PointConfiguration& xi, double s, double x, double t, double y) {
  if (s < 0.0 || t < 0.0) throw DomainError("corr_kernel requires s, t >= 0");
  if (!xi.is_simple())
    throw Unsupported("corr_kernel: multiple points are handled by the Hermite kernel");
  double sum = 0.0;
  for (double v : xi.points) sum += heat_kernel(s, x, v) * martingale_m(xi, v, t, y);
  if (s > t) sum -= heat_kernel(s - t, x, y);
  return sum;
}

KernelMatrix build_kernel_matrix(const std::function<double(SpaceTimePoint, SpaceTimePoint)>& k,
                                 const std::vector<SpaceTimePoint>& points) {
  KernelMatrix m;
  m.size = points.size();
  m.labels = points;
  m.entries.resize(m.size * m.size);
  for (std::size_t i = 0; i < m.size; ++i)
    for (std::size_t j = 0; j < m.size; ++j) m.entries[i * m.size + j] = k(points[i], points[j]);
  return m;
}

double spatio_temporal_corr(const PointConfiguration& xi,
                            const std::vector<SpaceTimePoint>& points) {
  xi.validate();
  std::function<double(SpaceTimePoint, SpaceTimePoint)> k;
  if (xi.is_simple()) {
    k = [&xi](SpaceTimePoint a, SpaceTimePoint b) {
      return corr_kernel(xi, a.t, a.x, b.t, b.x);
    };
  } else if (xi.points.size() == 1 && xi.points[0] == 0.0) {
    const std::size_t n = xi.multiplicities[0];
    k = [n](SpaceTimePoint a, SpaceTimePoint b) {
      return ndelta0_kernel(n, a.t, a.x, b.t, b.x);
    };
  } else {
    throw Unsupported("spatio_temporal_corr: general multiple points not implemented");
  }
  return build_kernel_matrix(k, points).det();
}

}  // namespace loggas::detproc
