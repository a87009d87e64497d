#pragma once

#include <functional>
#include <string>
#include <vector>

#include "reciproca/constants.hpp"
#include "reciproca/mat.hpp"

namespace reciproca {

// One-degree-of-freedom Hamiltonian H(q, p, t) with its analytic gradient
// (dH/dq, dH/dp, dH/dt). The gradient is validated against central finite
// differences when the Hamiltonian is registered.
struct Hamiltonian {
  std::string name;
  std::function<double(double q, double p, double t)> h;
  std::function<void(double q, double p, double t, double& dq, double& dp, double& dt)> grad;
};

// Built-in systems: "free" (H = p^2/2), "oscillator" (H = (p^2+q^2)/2),
// "driven" (H = p^2/2 + q t). Unknown names raise InvalidArgument.
Hamiltonian hamiltonian_by_name(const std::string& name);

// Central finite-difference check of grad against h at a few probe points.
// Throws InvalidArgument when they disagree beyond tol.
void validate_gradient(const Hamiltonian& h, double tol = 1e-6);

// Samples of a Hamiltonian flow with a uniform time step, together with the
// instantaneous rates v = dH/dp, f = -dH/dq, r = dH/dt along the path, and
// the energy coordinate e(t) = H(q(t), p(t), t).
struct Trajectory {
  double dt_step = 0.0;
  std::vector<double> t, q, p, e, v, f, r;
  std::size_t size() const { return t.size(); }
};

// Classic fixed-step fourth-order Runge-Kutta integration of Hamilton's
// equations from (q0, p0) at t = 0 to exactly t_end. The step is shrunk to
// the nearest divisor of t_end at or below dt_step so samples stay uniform
// and the final sample lands on t_end.
Trajectory integrate_hamilton(const Hamiltonian& h, double q0, double p0, double t_end,
                              double dt_step);

// Rate boost of the comoving frame at every sample.
std::vector<Mat<4>> frame_along_trajectory(const Trajectory& traj);

// Legendre transform in the position picture: solves v = dH/dp for p by
// Newton iteration (bisection fallback) and returns L(q, v, t) = p v - H.
// Throws SingularHessian when d2H/dp2 vanishes at the solution path.
double legendre_position(const Hamiltonian& h, double q, double v, double t,
                         double* p_out = nullptr);

// Legendre transform in the momentum picture: solves f = -dH/dq for q and
// returns L(p, f, t) = -(H + q f).
double legendre_momentum(const Hamiltonian& h, double p, double f, double t,
                         double* q_out = nullptr);

enum class LagrangianForm { position, momentum };

// Max Euler-Lagrange residual along the interior samples of a trajectory:
// position form  d/dt (dL/dv) - dL/dq, momentum form d/dt (dL/df) - dL/dp.
// Small for true flows, order one for fabricated paths.
double euler_lagrange_residual(const Hamiltonian& h, const Trajectory& traj, LagrangianForm form);

}  // namespace reciproca
