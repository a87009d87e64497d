#pragma once

#include <cmath>

#include "reciproca/errors.hpp"
#include "reciproca/mat.hpp"

namespace reciproca {

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
};

// Physical constants of the two-scale kinematics: c bounds velocities, b
// bounds forces (power/rate of momentum transfer), and together with hbar
// they fix the natural scales of time, position, momentum and energy.
struct Constants {
  double c = 1.0;
  double b = 1.0;
  double hbar = 1.0;
  double alpha_G = 1.0;

  double lambda_t() const { return std::sqrt(hbar / (b * c)); }
  double lambda_q() const { return std::sqrt(hbar * c / b); }
  double lambda_p() const { return std::sqrt(hbar * b / c); }
  double lambda_e() const { return std::sqrt(hbar * b * c); }
  double gravitational() const { return alpha_G * c * c * c * c / b; }
};

inline Constants make_constants(double c, double b, double hbar = 1.0, double alpha_G = 1.0) {
  if (!(std::isfinite(c) && c > 0.0) || !(std::isfinite(b) && b > 0.0) ||
      !(std::isfinite(hbar) && hbar > 0.0) || !(std::isfinite(alpha_G) && alpha_G > 0.0))
    fail(errc::invalid_argument, "constants must be positive and finite");
  return Constants{c, b, hbar, alpha_G};
}

// Differential frame on the cotangent slots (dt, dq, dp, de), with an
// optional central slot diota used by the centrally extended groups.
struct FrameVector {
  double dt = 0.0;
  double dq = 0.0;
  double dp = 0.0;
  double de = 0.0;
  double diota = 0.0;

  Vec<4> slots() const { return Vec<4>{dt, dq, dp, de}; }
  static FrameVector from_slots(const Vec<4>& z, double diota = 0.0) {
    return FrameVector{z[0], z[1], z[2], z[3], diota};
  }
};

inline FrameVector apply(const Mat<4>& g, const FrameVector& z) {
  return FrameVector::from_slots(g * z.slots(), z.diota);
}

// Rescale each slot by its natural scale. Round-trips with dimensionalize.
inline FrameVector nondimensionalize(const FrameVector& z, const Constants& k) {
  return FrameVector{z.dt / k.lambda_t(), z.dq / k.lambda_q(), z.dp / k.lambda_p(),
                     z.de / k.lambda_e(), z.diota / k.hbar};
}

inline FrameVector dimensionalize(const FrameVector& z, const Constants& k) {
  return FrameVector{z.dt * k.lambda_t(), z.dq * k.lambda_q(), z.dp * k.lambda_p(),
                     z.de * k.lambda_e(), z.diota * k.hbar};
}

}  // namespace reciproca
