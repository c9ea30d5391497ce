#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "loggas/errors.hpp"
#include "loggas/stochastic/processes.hpp"

// Chordal Loewner machinery: forward flow with derivative tracking, trace
// extraction by backward composition of elementary slit maps, the log-gas
// driving process, Green's functions of the upper half plane, the harmonic
// observable h_t with continuous argument tracking, Dirichlet energy, and
// the field-coupling functional.

namespace loggas::sle {

using complex = std::complex<double>;

// --- driving paths -----------------------------------------------------------

// N driving functions sampled on a uniform grid; piecewise linear in between.
struct DriverPath {
  std::size_t n = 1;
  double t_end = 0.0;
  std::vector<double> values;  // values[k*n + i], k = 0..steps

  std::size_t steps() const { return values.size() / n - 1; }
  double dt() const { return t_end / double(steps()); }
  double value(std::size_t i, double t) const;
  static DriverPath constant(const std::vector<double>& v, double t_end, std::size_t steps);
};

// sqrt(kappa) BM driver.
DriverPath sample_sle_driver(double kappa, double t_end, std::size_t steps,
                             stochastic::Seed seed);

// dY_i = sqrt(kappa) dB_i + 4 sum_{j != i} dt/(Y_i - Y_j); a kappa-time-change
// of the beta = 8/kappa log-gas.
DriverPath sample_dyson_driver(double kappa, std::size_t n, const std::vector<double>& y0,
                               double t_end, std::size_t steps, stochastic::Seed seed);
// Same SDE with an arbitrary interaction coefficient (4 is the coupling value;
// 2 gives the broken beta = 4/kappa variant used by the falsification test).
DriverPath sample_interaction_driver(double kappa, double coeff, std::size_t n,
                                     const std::vector<double>& y0, double t_end,
                                     std::size_t steps, stochastic::Seed seed);

// --- forward Loewner flow ------------------------------------------------------

struct FlowPoint {
  complex g;        // g_t(z)
  complex log_gp;   // log g_t'(z), integrated along the flow
  std::vector<double> arg_g_minus_y;  // unwrapped arg(g - Y_i)
  bool swallowed = false;
  double swallow_time = 0.0;
};

struct LoewnerOptions {
  double swallow_eps = 1e-9;
  double proximity_factor = 10.0;  // reject step while min|g-V_i|^2 < factor * dt
  std::size_t max_halvings = 48;
};

// Advance one tracked point through [t0, t0+dt] of the flow dg/dt =
// sum_i 2/(g - V_i(t)) with RK4 and proximity-based step control; log g' is
// integrated alongside and the arguments are accumulated increment by
// increment (never rewrapped).
void advance_point(FlowPoint& p, const DriverPath& driver, double t0, double dt,
                   const LoewnerOptions& opt = {});

struct LoewnerResult {
  std::vector<double> times;
  std::vector<complex> g;
  std::vector<complex> log_gp;
  std::optional<double> swallow_time;
};

// Flow of a single point recorded at the driver grid times up to t_end.
LoewnerResult loewner_forward(const DriverPath& driver, complex z0, double t_end,
                              const LoewnerOptions& opt = {});

// Half-plane capacity fitted from g at a far-away probe point.
double hcap_fit(const DriverPath& driver, double t_end, double probe_radius = 1e4);

// --- traces -----------------------------------------------------------------

struct CurveTrace {
  std::vector<double> times;
  std::vector<complex> points;
  double method_tol = 0.0;
};

// Backward composition of elementary vertical-slit maps, midpoint-frozen
// driver, lift epsilon 1e-6.
CurveTrace loewner_trace(const DriverPath& driver, double t_end, std::size_t n_steps);

// Multi-slit traces by Lie/Strang splitting: per global step one elementary
// map of capacity 2 dt per driver, order reversed on alternate steps.
std::vector<CurveTrace> multi_sle_trace(const DriverPath& driver, double t_end,
                                        std::size_t n_steps);

struct SleSample {
  DriverPath driver;
  CurveTrace trace;
};
SleSample sample_sle(double kappa, double t_end, std::size_t n_steps, stochastic::Seed seed);

// Touch detector: any trace point with Im < eps after the burn-in time.
bool trace_touches_real(const CurveTrace& trace, double im_eps = 1e-3,
                        double t_burn = 0.02);

// --- Green's functions ---------------------------------------------------------

double green_halfplane(complex z, complex w);
double green_first_orthant(complex z, complex w);
// G_H(g(z), g(w)) for already-flowed images.
double green_pullback(complex gz, complex gw);

// |d/dt G^{g_t}(z,w) - RHS| with the right side -4 sum Im(1/(g(z)-Y_i)) Im(1/(g(w)-Y_i)),
// time derivative by central differences of step dt_fd along the flow.
double dg_dt_residual(const DriverPath& driver, complex z, complex w, double t,
                      double dt_fd = 1e-4);

// --- coupling observable ---------------------------------------------------------

struct CouplingParams {
  double kappa;
  double chi;

  static CouplingParams standard(double kappa) {
    return {kappa, 2.0 / std::sqrt(kappa) - std::sqrt(kappa) / 2.0};
  }
};

// h_t(z) = -(2/sqrt(kappa)) sum_i arg(g(z)-Y_i) - chi arg g'(z), from tracked
// unwrapped arguments.
double h_field(const FlowPoint& p, const CouplingParams& cp);

// --- window quadrature and energy -------------------------------------------------

struct Window {
  double re_lo, re_hi, im_lo, im_hi;
};

struct WindowQuadrature {
  std::vector<complex> nodes;
  std::vector<double> weights;  // 2-d Gauss-Legendre weights (area measure)
  Window window;

  static WindowQuadrature tensor(const Window& w, std::size_t n_per_axis);
};

// Smooth bump supported on the window.
double bump(const Window& w, complex z);

// E_A(f) = int int f G^{g_t} f dmu dmu; the log singularity is split off
// analytically and integrated on a refined local grid once per quadrature.
class DirichletEnergy {
 public:
  DirichletEnergy(const WindowQuadrature& quad, std::function<double(complex)> f);

  // g and log g' at every node (same order as quad.nodes); throws
  // StoppedDomain if a node is swallowed or below the margin.
  double value(const std::vector<complex>& g_nodes,
               const std::vector<complex>& log_gp_nodes) const;
  double value_identity() const;  // t = 0: g = id

  double inner_h(const std::vector<double>& h_nodes) const;  // <h, f> quadrature

  const WindowQuadrature& quadrature() const { return quad_; }
  const std::vector<double>& f_values() const { return f_; }

 private:
  WindowQuadrature quad_;
  std::vector<double> f_;
  double singular_part_ = 0.0;  // t-independent: - int int f log|z-w| f
};

// --- flows carrying many nodes (Monte Carlo driver) -------------------------------

class CoupledFlow {
 public:
  CoupledFlow(const DriverPath& driver, const std::vector<complex>& nodes,
              const LoewnerOptions& opt = {});

  // advance all nodes to time t (monotone increasing calls)
  void advance_to(double t);

  double time() const { return t_; }
  const DriverPath& driver() const { return driver_; }
  const std::vector<FlowPoint>& points() const { return points_; }
  std::vector<complex> g_nodes() const;
  std::vector<complex> log_gp_nodes() const;
  std::vector<double> h_nodes(const CouplingParams& cp) const;

 private:
  DriverPath driver_;
  std::vector<FlowPoint> points_;
  double t_ = 0.0;
  LoewnerOptions opt_;
};

// exp(-theta^2/2 E_A(f) + i theta <h_t, f>).
complex coupling_functional(double theta, double energy, double h_inner);

// --- CFT relations ------------------------------------------------------------------

struct CftValues {
  double c;
  double h;
  double chi;
};
CftValues cft_relations(double kappa);

}  // namespace loggas::sle
