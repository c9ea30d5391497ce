#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <limits>
#include <thread>
#include <vector>

#include "loggas/simd/kernels.hpp"
#include "loggas/stochastic/processes.hpp"

namespace loggas::stochastic {

namespace {

// Single-lane state.  The batched ensemble runner and sample_dyson go through
// the same kernels in the same order, so a path depends only on its seed, not
// on how it was batched.
struct Lane {
  std::vector<double> x;
  Philox rng;
  bool collided = false;
  double collision_time = 0.0;
};

bool ordered(const double* x, std::size_t n) {
  for (std::size_t i = 1; i < n; ++i)
    if (!(x[i - 1] < x[i])) return false;
  return true;
}

double min_gap(const double* x, std::size_t n) {
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < n; ++i) g = std::min(g, x[i] - x[i - 1]);
  return g;
}

struct SdeParams {
  double sigma;          // noise coefficient
  double c;              // interaction coefficient (drift = c * sum 1/gap)
  double trigger;        // halve while gap^2 < trigger * dt_local
  bool keep_order;       // retry noise on artificial crossings
};

// One EM sub-step of size h; returns true if the lane crossed.  In the
// ordered regime (beta >= 1) a crossing is a pure discretization artifact of
// an exchangeable system, so the labels are restored by sorting.
bool lane_substep(Lane& s, double h, const SdeParams& p, bool clamp) {
  const std::size_t n = s.x.size();
  std::vector<double> drift(n), z(n), trial(n);
  simd::pairwise_recip_drift(s.x.data(), drift.data(), n, 1);
  if (clamp) {
    const double g = min_gap(s.x.data(), n);
    const double lim = 0.25 * g / (p.c * h);
    for (auto& d : drift) d = std::clamp(d, -lim, lim);
  }
  const double ch = p.c * h;
  const double sd = p.sigma * std::sqrt(h);
  for (std::size_t i = 0; i < n; ++i) z[i] = s.rng.next_normal();
  trial = s.x;
  simd::em_update(trial.data(), drift.data(), z.data(), ch, sd, n);
  const bool crossed = !ordered(trial.data(), n);
  if (crossed && p.keep_order) std::sort(trial.begin(), trial.end());
  s.x = trial;
  return crossed && !p.keep_order;
}

bool lane_advance(Lane& s, double dt, const SdeParams& p, int depth = 0) {
  const double g = min_gap(s.x.data(), s.x.size());
  if (g * g >= p.trigger * dt || depth >= 20 || s.x.size() == 1)
    return lane_substep(s, dt, p, depth >= 20);
  if (lane_advance(s, 0.5 * dt, p, depth + 1)) return true;
  return lane_advance(s, 0.5 * dt, p, depth + 1);
}

// Lockstep batch of lanes in SoA layout x[i*L + l].
class Batch {
 public:
  Batch(std::size_t n, std::vector<Lane> lanes, const SdeParams& p)
      : n_(n), L_(lanes.size()), lanes_(std::move(lanes)), p_(p) {
    x_.resize(n_ * L_);
    drift_.resize(n_ * L_);
    noise_.resize(n_ * L_);
    for (std::size_t l = 0; l < L_; ++l)
      for (std::size_t i = 0; i < n_; ++i) x_[i * L_ + l] = lanes_[l].x[i];
  }

  void step(double dt, double t_now) {
    // classify on the pre-step state
    std::vector<bool> slow(L_, false);
    for (std::size_t l = 0; l < L_; ++l) {
      if (lanes_[l].collided) {
        slow[l] = true;  // frozen
        continue;
      }
      double g = std::numeric_limits<double>::infinity();
      for (std::size_t i = 1; i < n_; ++i) g = std::min(g, x_[i * L_ + l] - x_[(i - 1) * L_ + l]);
      if (n_ > 1 && g * g < p_.trigger * dt) slow[l] = true;
    }
    // slow lanes: recursive scalar refinement
    for (std::size_t l = 0; l < L_; ++l) {
      if (!slow[l] || lanes_[l].collided) continue;
      scatter(l);
      const bool crossed = lane_advance(lanes_[l], dt, p_);
      if (crossed && !p_.keep_order) {
        lanes_[l].collided = true;
        lanes_[l].collision_time = t_now + dt;
      }
      gather(l);
    }
    // fast lanes: one batched EM step
    for (std::size_t l = 0; l < L_; ++l)
      if (!slow[l])
        for (std::size_t i = 0; i < n_; ++i) noise_[i * L_ + l] = lanes_[l].rng.next_normal();
    simd::pairwise_recip_drift(x_.data(), drift_.data(), n_, L_);
    for (std::size_t l = 0; l < L_; ++l)
      if (slow[l])
        for (std::size_t i = 0; i < n_; ++i) {
          drift_[i * L_ + l] = 0.0;
          noise_[i * L_ + l] = 0.0;
        }
    simd::em_update(x_.data(), drift_.data(), noise_.data(), p_.c * dt, p_.sigma * std::sqrt(dt),
                    n_ * L_);
    // rare artificial crossings on fast lanes: restore order by sorting
    for (std::size_t l = 0; l < L_; ++l) {
      if (slow[l]) continue;
      bool ok = true;
      for (std::size_t i = 1; i < n_; ++i)
        ok &= (x_[(i - 1) * L_ + l] < x_[i * L_ + l]);
      if (ok) continue;
      scatter(l);
      if (p_.keep_order) {
        std::sort(lanes_[l].x.begin(), lanes_[l].x.end());
        gather(l);
      } else {
        lanes_[l].collided = true;
        lanes_[l].collision_time = t_now + dt;
      }
    }
  }

  const double* soa() const { return x_.data(); }
  std::size_t lanes() const { return L_; }
  std::size_t particles() const { return n_; }
  const Lane& lane(std::size_t l) const { return lanes_[l]; }
  void lane_values(std::size_t l, double* out) const {
    for (std::size_t i = 0; i < n_; ++i) out[i] = x_[i * L_ + l];
  }

 private:
  void scatter(std::size_t l) {
    for (std::size_t i = 0; i < n_; ++i) lanes_[l].x[i] = x_[i * L_ + l];
  }
  void gather(std::size_t l) {
    for (std::size_t i = 0; i < n_; ++i) x_[i * L_ + l] = lanes_[l].x[i];
  }

  std::size_t n_, L_;
  std::vector<Lane> lanes_;
  SdeParams p_;
  std::vector<double> x_, drift_, noise_;
};

SdeParams make_params(double sigma, double c) {
  // trigger 8c recovers gap^2 < 4 beta dt for the log-gas and is invariant
  // under the kappa time change used by the Loewner driver; the ordered
  // regime test (beta >= 1) carries a rounding allowance so that the
  // boundary case sqrt(kappa)^2 = kappa stays inside
  return SdeParams{sigma, c, 8.0 * c, 2.0 * c >= sigma * sigma * (1.0 - 1e-12)};
}

std::vector<double> initial_config(std::size_t n, const std::vector<double>& x0, double eps) {
  if (x0.size() != n) throw DomainError("x0 size mismatch");
  for (std::size_t i = 1; i < n; ++i)
    if (x0[i] < x0[i - 1]) throw DomainError("x0 must be nondecreasing");
  std::vector<double> x = x0;
  bool tied = false;
  for (std::size_t i = 1; i < n; ++i) tied |= (x0[i] == x0[i - 1]);
  if (tied)
    for (std::size_t i = 0; i < n; ++i) x[i] += eps * (double(i) - 0.5 * double(n - 1));
  return x;
}

}  // namespace

EnsemblePath sample_interacting(double sigma, double c, std::size_t n,
                                const std::vector<double>& x0, const TimeGrid& grid, Seed seed,
                                bool stop_on_collision, const DysonOptions& opt) {
  const SdeParams p = make_params(sigma, c);
  std::vector<Lane> lanes;
  lanes.push_back(Lane{initial_config(n, x0, opt.multiple_point_eps), Philox(seed)});
  Batch batch(n, std::move(lanes), p);

  EnsemblePath path;
  path.n_particles = n;
  path.times.push_back(0.0);
  std::vector<double> buf(n);
  batch.lane_values(0, buf.data());
  path.values.insert(path.values.end(), buf.begin(), buf.end());

  for (std::size_t k = 1; k <= grid.n_steps; ++k) {
    batch.step(grid.dt(), grid.time(k - 1));
    if (batch.lane(0).collided && stop_on_collision) {
      path.collision_at = batch.lane(0).collision_time;
      break;
    }
    if (k % opt.record_stride == 0) {
      path.times.push_back(grid.time(k));
      batch.lane_values(0, buf.data());
      path.values.insert(path.values.end(), buf.begin(), buf.end());
    }
  }
  if (batch.lane(0).collided && !path.collision_at)
    path.collision_at = batch.lane(0).collision_time;
  return path;
}

EnsemblePath sample_dyson(double beta, std::size_t n, const std::vector<double>& x0,
                          const TimeGrid& grid, Seed seed, const DysonOptions& opt) {
  if (!(beta > 0.0)) throw DomainError("sample_dyson requires beta > 0");
  return sample_interacting(1.0, 0.5 * beta, n, x0, grid, seed, beta < 1.0, opt);
}

EnsembleFinal dyson_ensemble_final(double beta, std::size_t n, const std::vector<double>& x0,
                                   const TimeGrid& grid, Seed seed, std::size_t n_paths,
                                   unsigned threads) {
  const SdeParams p = make_params(1.0, 0.5 * beta);
  const std::size_t kLanes = 16;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_batches = (n_paths + kLanes - 1) / kLanes;

  EnsembleFinal out;
  out.n_particles = n;
  out.values.resize(n_paths * n);
  out.collided.assign(n_paths, 0);

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= n_batches) return;
      const std::size_t lo = b * kLanes;
      const std::size_t hi = std::min(lo + kLanes, n_paths);
      std::vector<Lane> lanes;
      for (std::size_t idx = lo; idx < hi; ++idx)
        lanes.push_back(
            Lane{initial_config(n, x0, 1e-6), Philox(seed.with_stream(seed.stream + idx))});
      Batch batch(n, std::move(lanes), p);
      for (std::size_t k = 1; k <= grid.n_steps; ++k) batch.step(grid.dt(), grid.time(k - 1));
      for (std::size_t l = 0; l < hi - lo; ++l) {
        batch.lane_values(l, out.values.data() + (lo + l) * n);
        out.collided[lo + l] = batch.lane(l).collided ? 1 : 0;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace loggas::stochastic
