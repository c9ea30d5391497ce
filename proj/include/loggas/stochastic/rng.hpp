#pragma once

#include <array>
#include <cstdint>

namespace loggas::stochastic {

// Reproducibility contract: (master, stream) fully determines every draw of
// one trajectory.  Ensembles assign one stream per path, so results do not
// depend on thread count or batching.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  Seed with_stream(std::uint64_t s) const { return Seed{master, s}; }
};

// Philox4x32-10 counter-based generator.
class Philox {
 public:
  explicit Philox(Seed seed) : key_{std::uint32_t(seed.master), std::uint32_t(seed.master >> 32)} {
    ctr_[0] = 0;
    ctr_[1] = 0;
    ctr_[2] = std::uint32_t(seed.stream);
    ctr_[3] = std::uint32_t(seed.stream >> 32);
  }

  // Four 32-bit words for counter index `idx` of this stream.
  std::array<std::uint32_t, 4> block(std::uint64_t idx) const;

  // Uniform on (0,1], consuming one 64-bit half-block per draw.
  double next_uniform();
  // Standard normal via Box-Muller on consecutive uniforms (pair-cached).
  double next_normal();

  std::uint64_t draws() const { return n_uniform_; }

 private:
  std::uint32_t key_[2];
  std::uint32_t ctr_[4];
  std::uint64_t n_uniform_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace loggas::stochastic
