#include <cmath>

#include "loggas/sle/sle.hpp"

namespace loggas::sle {

namespace {

// right-hand sides of the coupled flow for (g, log g')
inline complex flow_g(const DriverPath& d, complex g, double t) {
  complex s = 0.0;
  for (std::size_t i = 0; i < d.n; ++i) s += 2.0 / (g - d.value(i, t));
  return s;
}

inline complex flow_lgp(const DriverPath& d, complex g, double t) {
  complex s = 0.0;
  for (std::size_t i = 0; i < d.n; ++i) {
    const complex w = g - d.value(i, t);
    s -= 2.0 / (w * w);
  }
  return s;
}

inline double min_dist2(const DriverPath& d, complex g, double t) {
  double m = 1e300;
  for (std::size_t i = 0; i < d.n; ++i) m = std::min(m, std::norm(g - d.value(i, t)));
  return m;
}

}  // namespace

void seed_arguments(FlowPoint& p, const DriverPath& driver, double t0) {
  // principal branch once, then only increments are accumulated
  p.arg_g_minus_y.assign(driver.n, 0.0);
  for (std::size_t i = 0; i < driver.n; ++i)
    p.arg_g_minus_y[i] = std::arg(p.g - driver.value(i, t0));
}

void advance_point(FlowPoint& p, const DriverPath& driver, double t0, double dt,
                   const LoewnerOptions& opt) {
  if (p.swallowed) return;
  if (p.arg_g_minus_y.size() != driver.n) seed_arguments(p, driver, t0);
  double t_local = 0.0;
  while (t_local < dt * (1.0 - 1e-12)) {
    const double t = t0 + t_local;
    if (p.g.imag() < opt.swallow_eps) {
      p.swallowed = true;
      p.swallow_time = t;
      return;
    }
    double h = dt - t_local;
    std::size_t halvings = 0;
    while (min_dist2(driver, p.g, t) < opt.proximity_factor * h &&
           halvings < opt.max_halvings) {
      h *= 0.5;
      ++halvings;
    }
    // RK4 on (g, L)
    const complex g0 = p.g;
    const complex k1 = flow_g(driver, g0, t);
    const complex l1 = flow_lgp(driver, g0, t);
    const complex k2 = flow_g(driver, g0 + 0.5 * h * k1, t + 0.5 * h);
    const complex l2 = flow_lgp(driver, g0 + 0.5 * h * k1, t + 0.5 * h);
    const complex k3 = flow_g(driver, g0 + 0.5 * h * k2, t + 0.5 * h);
    const complex l3 = flow_lgp(driver, g0 + 0.5 * h * k2, t + 0.5 * h);
    const complex k4 = flow_g(driver, g0 + h * k3, t + h);
    const complex l4 = flow_lgp(driver, g0 + h * k3, t + h);
    const complex g1 = g0 + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    p.log_gp += h / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
    // unwrapped argument increments
    for (std::size_t i = 0; i < driver.n; ++i) {
      const complex w_old = g0 - driver.value(i, t);
      const complex w_new = g1 - driver.value(i, t + h);
      p.arg_g_minus_y[i] += std::arg(w_new / w_old);
    }
    p.g = g1;
    t_local += h;
  }
}

LoewnerResult loewner_forward(const DriverPath& driver, complex z0, double t_end,
                              const LoewnerOptions& opt) {
  if (!(z0.imag() > 0.0)) throw DomainError("loewner_forward requires Im z0 > 0");
  const std::size_t steps =
      std::size_t(std::lround(t_end / driver.t_end * double(driver.steps())));
  const double dt = t_end / double(steps);
  FlowPoint p;
  p.g = z0;
  p.log_gp = 0.0;
  LoewnerResult out;
  out.times.push_back(0.0);
  out.g.push_back(z0);
  out.log_gp.push_back(0.0);
  for (std::size_t k = 1; k <= steps; ++k) {
    advance_point(p, driver, double(k - 1) * dt, dt, opt);
    if (p.swallowed) {
      out.swallow_time = p.swallow_time;
      break;
    }
    out.times.push_back(double(k) * dt);
    out.g.push_back(p.g);
    out.log_gp.push_back(p.log_gp);
  }
  return out;
}

double hcap_fit(const DriverPath& driver, double t_end, double probe_radius) {
  const complex z0(0.0, probe_radius);
  const auto res = loewner_forward(driver, z0, t_end);
  const complex g = res.g.back();
  return ((g - z0) * z0).real();
}

double h_field(const FlowPoint& p, const CouplingParams& cp) {
  if (p.swallowed) throw SwallowedPoint("h_field: point swallowed by the hull");
  double s = 0.0;
  for (double a : p.arg_g_minus_y) s += a;
  return -2.0 / std::sqrt(cp.kappa) * s - cp.chi * p.log_gp.imag();
}

CoupledFlow::CoupledFlow(const DriverPath& driver, const std::vector<complex>& nodes,
                         const LoewnerOptions& opt)
    : driver_(driver), opt_(opt) {
  points_.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    points_[i].g = nodes[i];
    points_[i].log_gp = 0.0;
    seed_arguments(points_[i], driver_, 0.0);
  }
}

void CoupledFlow::advance_to(double t) {
  if (t < t_) throw DomainError("CoupledFlow::advance_to: time must not decrease");
  const double grid_dt = driver_.dt();
  while (t_ < t - 1e-15) {
    const double h = std::min(grid_dt, t - t_);
    for (auto& p : points_) advance_point(p, driver_, t_, h, opt_);
    t_ += h;
  }
}

std::vector<complex> CoupledFlow::g_nodes() const {
  std::vector<complex> out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) out[i] = points_[i].g;
  return out;
}

std::vector<complex> CoupledFlow::log_gp_nodes() const {
  std::vector<complex> out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) out[i] = points_[i].log_gp;
  return out;
}

std::vector<double> CoupledFlow::h_nodes(const CouplingParams& cp) const {
  std::vector<double> out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) out[i] = h_field(points_[i], cp);
  return out;
}

complex coupling_functional(double theta, double energy, double h_inner) {
  return std::exp(complex(-0.5 * theta * theta * energy, theta * h_inner));
}

CftValues cft_relations(double kappa) {
  if (!(kappa > 0.0)) throw DomainError("cft_relations requires kappa > 0");
  CftValues v;
  v.c = (6.0 - kappa) * (3.0 * kappa - 8.0) / (2.0 * kappa);
  v.h = (6.0 - kappa) / (2.0 * kappa);
  v.chi = 2.0 / std::sqrt(kappa) - std::sqrt(kappa) / 2.0;
  if (std::abs(v.c - (1.0 - 6.0 * v.chi * v.chi)) > 1e-12)
    throw DomainError("cft_relations: c != 1 - 6 chi^2 beyond rounding");
  return v;
}

}  // namespace loggas::sle
