#pragma once

#include "reciproca/constants.hpp"
#include "reciproca/mat.hpp"

namespace reciproca {

// 1+1 dimensional velocity boost on (dt, dq):
//   gamma * [[1, v/c^2], [v, 1]],  gamma = (1 - (v/c)^2)^(-1/2).
// Rejects |v| >= c(1 - 1e-15).
Mat<2> lorentz2(double v, const Constants& k = {});

// Relativistic velocity composition (v1 + v2) / (1 + v1 v2 / c^2).
double velocity_add(double v1, double v2, const Constants& k = {});

// Degenerate c -> infinity limit [[1, 0], [v, 1]].
Mat<2> newton_boost2(double v);

// Velocity boost acting on the full frame (dt, dq, dp, de): the 2x2 boost
// applied to the (dt, dq) and (dp, de) pairs, with exact zero cross blocks.
Mat<4> gamma4(double v, const Constants& k = {});

// c -> infinity limit of gamma4.
Mat<4> newton_boost4(double v);

struct LineElements {
  double ds2;   // -dt^2 + dq^2/c^2
  double dmu2;  // dp^2 - de^2/c^2
};

LineElements line_elements(const FrameVector& z, const Constants& k = {});

}  // namespace reciproca
