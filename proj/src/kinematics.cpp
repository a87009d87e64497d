#include "reciproca/kinematics.hpp"

#include <cmath>

namespace reciproca {

namespace {

void check_speed(double v, const Constants& k) {
  if (!std::isfinite(v)) fail(errc::invalid_argument, "velocity must be finite");
  if (std::fabs(v) >= k.c * (1.0 - 1e-15))
    fail(errc::superluminal_rate, "|v| must stay below c");
}

}  // namespace

Mat<2> lorentz2(double v, const Constants& k) {
  check_speed(v, k);
  const double beta = v / k.c;
  const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
  Mat<2> m;
  m(0, 0) = gamma;
  m(0, 1) = gamma * v / (k.c * k.c);
  m(1, 0) = gamma * v;
  m(1, 1) = gamma;
  return m;
}

double velocity_add(double v1, double v2, const Constants& k) {
  check_speed(v1, k);
  check_speed(v2, k);
  return (v1 + v2) / (1.0 + v1 * v2 / (k.c * k.c));
}

Mat<2> newton_boost2(double v) {
  if (!std::isfinite(v)) fail(errc::invalid_argument, "velocity must be finite");
  Mat<2> m = Mat<2>::identity();
  m(1, 0) = v;
  return m;
}

Mat<4> gamma4(double v, const Constants& k) {
  const Mat<2> l = lorentz2(v, k);
  Mat<4> m;
  m(0, 0) = l(0, 0);
  m(0, 1) = l(0, 1);
  m(1, 0) = l(1, 0);
  m(1, 1) = l(1, 1);
  m(2, 2) = l(0, 0);
  m(2, 3) = l(0, 1);
  m(3, 2) = l(1, 0);
  m(3, 3) = l(1, 1);
  return m;
}

Mat<4> newton_boost4(double v) {
  if (!std::isfinite(v)) fail(errc::invalid_argument, "velocity must be finite");
  Mat<4> m = Mat<4>::identity();
  m(1, 0) = v;
  m(3, 2) = v;
  return m;
}

LineElements line_elements(const FrameVector& z, const Constants& k) {
  const double c2 = k.c * k.c;
  return LineElements{-z.dt * z.dt + z.dq * z.dq / c2, z.dp * z.dp - z.de * z.de / c2};
}

}  // namespace reciproca
