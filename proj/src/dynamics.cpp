#include "reciproca/dynamics.hpp"

#include <cmath>

#include "reciproca/hamilton.hpp"

namespace reciproca {

Hamiltonian hamiltonian_by_name(const std::string& name) {
  Hamiltonian h;
  h.name = name;
  if (name == "free") {
    h.h = [](double, double p, double) { return 0.5 * p * p; };
    h.grad = [](double, double p, double, double& dq, double& dp, double& dt) {
      dq = 0.0;
      dp = p;
      dt = 0.0;
    };
  } else if (name == "oscillator") {
    h.h = [](double q, double p, double) { return 0.5 * (p * p + q * q); };
    h.grad = [](double q, double p, double, double& dq, double& dp, double& dt) {
      dq = q;
      dp = p;
      dt = 0.0;
    };
  } else if (name == "driven") {
    h.h = [](double q, double p, double t) { return 0.5 * p * p + q * t; };
    h.grad = [](double q, double p, double t, double& dq, double& dp, double& dt) {
      dq = t;
      dp = p;
      dt = q;
    };
  } else {
    fail(errc::invalid_argument, "unknown hamiltonian '" + name + "'");
  }
  validate_gradient(h);
  return h;
}

void validate_gradient(const Hamiltonian& h, double tol) {
  if (!h.h || !h.grad) fail(errc::invalid_argument, "hamiltonian must define h and grad");
  const double probes[][3] = {{0.3, -0.7, 0.1}, {1.1, 0.4, 0.9}, {-0.6, 1.3, 2.0}, {0.0, 0.0, 0.0}};
  const double d = 1e-5;
  for (const auto& pt : probes) {
    const double q = pt[0], p = pt[1], t = pt[2];
    double gq, gp, gt;
    h.grad(q, p, t, gq, gp, gt);
    const double fq = (h.h(q + d, p, t) - h.h(q - d, p, t)) / (2.0 * d);
    const double fp = (h.h(q, p + d, t) - h.h(q, p - d, t)) / (2.0 * d);
    const double ft = (h.h(q, p, t + d) - h.h(q, p, t - d)) / (2.0 * d);
    if (std::fabs(gq - fq) > tol || std::fabs(gp - fp) > tol || std::fabs(gt - ft) > tol)
      fail(errc::invalid_argument, "gradient disagrees with finite differences");
  }
}

namespace {

struct Rhs {
  double dq, dp;
};

Rhs flow(const Hamiltonian& h, double q, double p, double t) {
  double gq, gp, gt;
  h.grad(q, p, t, gq, gp, gt);
  return Rhs{gp, -gq};
}

}  // namespace

Trajectory integrate_hamilton(const Hamiltonian& h, double q0, double p0, double t_end,
                              double dt_step) {
  if (!(std::isfinite(q0) && std::isfinite(p0) && std::isfinite(t_end) && std::isfinite(dt_step)))
    fail(errc::invalid_argument, "trajectory inputs must be finite");
  if (dt_step <= 0.0) fail(errc::invalid_argument, "dt_step must be positive");
  if (t_end <= 0.0) fail(errc::invalid_argument, "t_end must be positive");
  if (dt_step > t_end) fail(errc::step_too_large, "dt_step exceeds t_end");

  const long long n = static_cast<long long>(std::ceil(t_end / dt_step - 1e-9));
  const double step = t_end / static_cast<double>(n);

  Trajectory traj;
  traj.dt_step = step;
  traj.t.reserve(static_cast<std::size_t>(n) + 1);

  double q = q0, p = p0;
  for (long long i = 0; i <= n; ++i) {
    const double t = (i == n) ? t_end : static_cast<double>(i) * step;
    double gq, gp, gt;
    h.grad(q, p, t, gq, gp, gt);
    traj.t.push_back(t);
    traj.q.push_back(q);
    traj.p.push_back(p);
    traj.e.push_back(h.h(q, p, t));
    traj.v.push_back(gp);
    traj.f.push_back(-gq);
    traj.r.push_back(gt);
    if (i == n) break;

    const Rhs k1 = flow(h, q, p, t);
    const Rhs k2 = flow(h, q + 0.5 * step * k1.dq, p + 0.5 * step * k1.dp, t + 0.5 * step);
    const Rhs k3 = flow(h, q + 0.5 * step * k2.dq, p + 0.5 * step * k2.dp, t + 0.5 * step);
    const Rhs k4 = flow(h, q + step * k3.dq, p + step * k3.dp, t + step);
    q += step / 6.0 * (k1.dq + 2.0 * k2.dq + 2.0 * k3.dq + k4.dq);
    p += step / 6.0 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
  }
  return traj;
}

std::vector<Mat<4>> frame_along_trajectory(const Trajectory& traj) {
  std::vector<Mat<4>> frames;
  frames.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i)
    frames.push_back(hamilton_element(RateParams{traj.v[i], traj.f[i], traj.r[i], 0.0}));
  return frames;
}

namespace {

// Solve target = g(x) for x where g is monotone near the start; Newton with
// finite-difference slope, falling back to expanding-bracket bisection.
double solve_scalar(const std::function<double(double)>& g, double target, double x0,
                    const char* what) {
  const double d = 1e-6;
  const double slope0 = (g(x0 + d) - g(x0 - d)) / (2.0 * d);
  if (std::fabs(slope0) < 1e-8)
    fail(errc::singular_hessian, std::string("second derivative vanishes for ") + what);
  double x = x0;
  for (int it = 0; it < 100; ++it) {
    const double err = g(x) - target;
    if (std::fabs(err) <= 1e-12 * std::max(1.0, std::fabs(target))) return x;
    const double slope = (g(x + d) - g(x - d)) / (2.0 * d);
    if (std::fabs(slope) < 1e-8)
      fail(errc::singular_hessian, std::string("second derivative vanishes for ") + what);
    x -= err / slope;
    if (!std::isfinite(x)) break;
  }
  // Bisection fallback on an expanding bracket.
  double lo = x0, hi = x0;
  double width = 1.0;
  for (int k = 0; k < 64; ++k) {
    lo = x0 - width;
    hi = x0 + width;
    if ((g(lo) - target) * (g(hi) - target) <= 0.0) break;
    width *= 2.0;
    if (k == 63) fail(errc::no_convergence, std::string("no bracket found for ") + what);
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double err = g(mid) - target;
    if (std::fabs(err) <= 1e-12 * std::max(1.0, std::fabs(target))) return mid;
    if ((g(lo) - target) * err <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  fail(errc::no_convergence, std::string("root search failed for ") + what);
}

}  // namespace

double legendre_position(const Hamiltonian& h, double q, double v, double t, double* p_out) {
  auto dh_dp = [&](double p) {
    double gq, gp, gt;
    h.grad(q, p, t, gq, gp, gt);
    return gp;
  };
  const double p = solve_scalar(dh_dp, v, v, "the momentum solve");
  if (p_out) *p_out = p;
  return p * v - h.h(q, p, t);
}

double legendre_momentum(const Hamiltonian& h, double p, double f, double t, double* q_out) {
  auto minus_dh_dq = [&](double q) {
    double gq, gp, gt;
    h.grad(q, p, t, gq, gp, gt);
    return -gq;
  };
  const double q = solve_scalar(minus_dh_dq, f, f, "the position solve");
  if (q_out) *q_out = q;
  return -(h.h(q, p, t) + q * f);
}

double euler_lagrange_residual(const Hamiltonian& h, const Trajectory& traj, LagrangianForm form) {
  const std::size_t n = traj.size();
  if (n < 3) fail(errc::invalid_argument, "trajectory too short for a residual");
  const double d = 1e-5;
  const double step = traj.dt_step;

  // dL/d(rate) at every sample, then a centered time derivative of it.
  std::vector<double> dl_drate(n);
  std::vector<double> dl_dstate(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (form == LagrangianForm::position) {
      const double q = traj.q[i], v = traj.v[i], t = traj.t[i];
      dl_drate[i] =
          (legendre_position(h, q, v + d, t) - legendre_position(h, q, v - d, t)) / (2.0 * d);
      dl_dstate[i] =
          (legendre_position(h, q + d, v, t) - legendre_position(h, q - d, v, t)) / (2.0 * d);
    } else {
      const double p = traj.p[i], f = traj.f[i], t = traj.t[i];
      dl_drate[i] =
          (legendre_momentum(h, p, f + d, t) - legendre_momentum(h, p, f - d, t)) / (2.0 * d);
      dl_dstate[i] =
          (legendre_momentum(h, p + d, f, t) - legendre_momentum(h, p - d, f, t)) / (2.0 * d);
    }
  }
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double ddt = (dl_drate[i + 1] - dl_drate[i - 1]) / (2.0 * step);
    worst = std::max(worst, std::fabs(ddt - dl_dstate[i]));
  }
  return worst;
}

}  // namespace reciproca
