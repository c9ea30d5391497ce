#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstring>
#include <random>
#include <vector>

#include "loggas/simd/kernels.hpp"

// Equivalence tests: every AVX2 kernel must reproduce the scalar reference
// bit for bit on random inputs (same operation order per lane, no FMA).

using namespace loggas::simd;

namespace {
std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

bool bits_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}
}  // namespace

TEST_CASE("backend dispatch") {
  CHECK_NOTHROW(set_backend(Backend::scalar));
  CHECK(active_backend() == Backend::scalar);
  if (cpu_has_avx2()) {
    CHECK_NOTHROW(set_backend(Backend::avx2));
    CHECK(active_backend() == Backend::avx2);
  }
}

TEST_CASE("em_update: scalar vs AVX2 bitwise") {
  if (!cpu_has_avx2()) return;
  std::mt19937_64 rng(1);
  for (std::size_t n : {1ul, 4ul, 7ul, 64ul, 1001ul}) {
    auto x0 = random_vec(rng, n, -5.0, 5.0);
    auto d = random_vec(rng, n, -3.0, 3.0);
    auto z = random_vec(rng, n, -3.0, 3.0);
    auto xa = x0, xb = x0;
    detail::em_update_scalar(xa.data(), d.data(), z.data(), 1e-3, 0.0316, n);
    detail::em_update_avx2(xb.data(), d.data(), z.data(), 1e-3, 0.0316, n);
    CHECK(bits_equal(xa, xb));
  }
}

TEST_CASE("recip_drift: scalar vs AVX2 bitwise") {
  if (!cpu_has_avx2()) return;
  std::mt19937_64 rng(2);
  auto x = random_vec(rng, 531, 0.01, 4.0);
  std::vector<double> oa(x.size()), ob(x.size());
  detail::recip_drift_scalar(x.data(), oa.data(), 0.75, x.size());
  detail::recip_drift_avx2(x.data(), ob.data(), 0.75, x.size());
  CHECK(bits_equal(oa, ob));
}

TEST_CASE("pairwise_recip_drift: scalar vs AVX2 bitwise") {
  if (!cpu_has_avx2()) return;
  std::mt19937_64 rng(3);
  for (std::size_t np : {2ul, 5ul, 8ul}) {
    for (std::size_t lanes : {1ul, 4ul, 16ul, 19ul}) {
      auto x = random_vec(rng, np * lanes, -4.0, 4.0);
      std::vector<double> da(np * lanes), db(np * lanes);
      detail::pairwise_recip_drift_scalar(x.data(), da.data(), np, lanes);
      detail::pairwise_recip_drift_avx2(x.data(), db.data(), np, lanes);
      CHECK(bits_equal(da, db));
    }
  }
}

TEST_CASE("sum4: scalar vs AVX2 bitwise") {
  if (!cpu_has_avx2()) return;
  std::mt19937_64 rng(4);
  for (std::size_t n : {3ul, 8ul, 65ul, 1000ul}) {
    auto x = random_vec(rng, n, -1.0, 1.0);
    double a[4], b[4];
    detail::sum4_scalar(x.data(), n, a);
    detail::sum4_avx2(x.data(), n, b);
    CHECK(std::memcmp(a, b, sizeof a) == 0);
  }
}

TEST_CASE("aberth_repulsion: scalar vs AVX2 bitwise") {
  if (!cpu_has_avx2()) return;
  std::mt19937_64 rng(5);
  for (std::size_t n : {2ul, 5ul, 17ul, 130ul}) {
    auto re = random_vec(rng, n, -2.0, 2.0);
    auto im = random_vec(rng, n, -2.0, 2.0);
    std::vector<double> sra(n), sia(n), srb(n), sib(n);
    detail::aberth_repulsion_scalar(re.data(), im.data(), n, sra.data(), sia.data());
    detail::aberth_repulsion_avx2(re.data(), im.data(), n, srb.data(), sib.data());
    CHECK(bits_equal(sra, srb));
    CHECK(bits_equal(sia, sib));
  }
}

TEST_CASE("poly_eval_batch: scalar vs AVX2 bitwise, and correctness") {
  if (cpu_has_avx2()) {
    std::mt19937_64 rng(6);
    for (std::size_t deg : {1ul, 3ul, 40ul}) {
      for (std::size_t n : {1ul, 4ul, 9ul}) {
        auto cr = random_vec(rng, deg + 1, -1.0, 1.0);
        auto ci = random_vec(rng, deg + 1, -1.0, 1.0);
        auto zr = random_vec(rng, n, -1.0, 1.0);
        auto zi = random_vec(rng, n, -1.0, 1.0);
        std::vector<double> pa(n), pb(n), qa(n), qb(n), da(n), db(n), ea(n), eb(n);
        detail::poly_eval_batch_scalar(cr.data(), ci.data(), deg, zr.data(), zi.data(), n,
                                       pa.data(), qa.data(), da.data(), ea.data());
        detail::poly_eval_batch_avx2(cr.data(), ci.data(), deg, zr.data(), zi.data(), n,
                                     pb.data(), qb.data(), db.data(), eb.data());
        CHECK(bits_equal(pa, pb));
        CHECK(bits_equal(qa, qb));
        CHECK(bits_equal(da, db));
        CHECK(bits_equal(ea, eb));
      }
    }
  }
  // correctness of p and p' on a known cubic: p(z) = (z-1)(z-2i)(z+3)
  // = z^3 + (2 - 2i) z^2 + (-3 - 4i) z + 6i
  const double cre[4] = {0.0, -3.0, 2.0, 1.0};
  const double cim[4] = {6.0, -4.0, -2.0, 0.0};
  const double zre[1] = {0.5}, zim[1] = {-0.25};
  double pr, pi, dr, di;
  detail::poly_eval_batch_scalar(cre, cim, 3, zre, zim, 1, &pr, &pi, &dr, &di);
  const std::complex<double> z(0.5, -0.25);
  const std::complex<double> want = (z - 1.0) * (z - std::complex<double>(0, 2)) * (z + 3.0);
  const std::complex<double> wantd = (z - std::complex<double>(0, 2)) * (z + 3.0) +
                                     (z - 1.0) * (z + 3.0) +
                                     (z - 1.0) * (z - std::complex<double>(0, 2));
  CHECK(std::abs(std::complex<double>(pr, pi) - want) < 1e-14);
  CHECK(std::abs(std::complex<double>(dr, di) - wantd) < 1e-14);
}

TEST_CASE("dispatched entry points honor the backend") {
  std::mt19937_64 rng(7);
  auto x = random_vec(rng, 100, 0.5, 2.0);
  std::vector<double> o1(100), o2(100);
  set_backend(Backend::scalar);
  recip_drift(x.data(), o1.data(), 2.0, 100);
  if (cpu_has_avx2()) set_backend(Backend::avx2);
  recip_drift(x.data(), o2.data(), 2.0, 100);
  CHECK(bits_equal(o1, o2));
}
