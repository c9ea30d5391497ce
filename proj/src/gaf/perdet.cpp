#include <Eigen/Dense>

#include "loggas/gaf/gaf.hpp"

namespace loggas::gaf {

complex permanent(const std::vector<complex>& m, std::size_t n) {
  if (n == 0) return 1.0;
  if (n > 24) throw MatrixTooLarge("permanent: Ryser is limited to n <= 24");
  if (m.size() != n * n) throw DomainError("permanent: matrix size mismatch");
  // Ryser with Gray-code subset updates:
  // per(A) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} a_ij
  std::vector<complex> row_sum(n, complex(0.0));
  complex total = 0.0;
  std::uint32_t gray = 0;
  int popcount = 0;
  const std::uint32_t limit = (std::uint32_t(1) << n) - 1;
  for (std::uint32_t k = 1; k <= limit; ++k) {
    const std::uint32_t next = k ^ (k >> 1);
    const std::uint32_t bit = next ^ gray;
    const std::size_t j = std::size_t(__builtin_ctz(bit));
    if (next & bit) {
      for (std::size_t i = 0; i < n; ++i) row_sum[i] += m[i * n + j];
      ++popcount;
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sum[i] -= m[i * n + j];
      --popcount;
    }
    gray = next;
    complex prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= row_sum[i];
    total += (popcount % 2 ? -prod : prod);
  }
  return (n % 2 ? -total : total);
}

complex determinant(const std::vector<complex>& m, std::size_t n) {
  if (n == 0) return 1.0;
  Eigen::MatrixXcd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m[i * n + j];
  return a.determinant();
}

complex perdet(const std::vector<complex>& m, std::size_t n) {
  return permanent(m, n) * determinant(m, n);
}

}  // namespace loggas::gaf
