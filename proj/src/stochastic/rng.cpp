#include "loggas/stochastic/rng.hpp"

#include <cmath>

namespace loggas::stochastic {

namespace {
constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::uint32_t c[4], const std::uint32_t k[2]) {
  const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * c[0];
  const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * c[2];
  const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
  const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
  const std::uint32_t n0 = hi1 ^ c[1] ^ k[0];
  const std::uint32_t n2 = hi0 ^ c[3] ^ k[1];
  c[0] = n0;
  c[1] = lo1;
  c[2] = n2;
  c[3] = lo0;
}
}  // namespace

std::array<std::uint32_t, 4> Philox::block(std::uint64_t idx) const {
  std::uint32_t c[4] = {std::uint32_t(idx), std::uint32_t(idx >> 32), ctr_[2], ctr_[3]};
  std::uint32_t k[2] = {key_[0], key_[1]};
  for (int r = 0; r < 10; ++r) {
    round_once(c, k);
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return {c[0], c[1], c[2], c[3]};
}

double Philox::next_uniform() {
  const std::uint64_t idx = n_uniform_ / 2;
  const auto b = block(idx);
  const bool second = n_uniform_ & 1;
  ++n_uniform_;
  const std::uint64_t bits = second ? (std::uint64_t(b[2]) << 32) | b[3]
                                    : (std::uint64_t(b[0]) << 32) | b[1];
  // (0,1]: the +1 keeps log() finite for Box-Muller.
  return double((bits >> 11) + 1) * 0x1.0p-53;
}

double Philox::next_normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  cached_ = r * std::sin(a);
  has_cached_ = true;
  return r * std::cos(a);
}

}  // namespace loggas::stochastic
