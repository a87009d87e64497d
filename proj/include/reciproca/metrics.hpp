#pragma once

#include "reciproca/constants.hpp"
#include "reciproca/mat.hpp"

namespace reciproca {

enum class MetricKind {
  symplectic,  // antisymmetric form pairing (dt,de) and (dq,dp)
  born_green,  // symmetric two-scale line element
  classical,   // degenerate time-only limit
  lorentz2,    // 1+1 dimensional light-cone metric on (dt, dq)
};

// Antisymmetric form zeta on (dt, dq, dp, de): zeta^2 = -I.
inline Mat<4> zeta() {
  Mat<4> z;
  z(0, 3) = 1.0;
  z(1, 2) = -1.0;
  z(2, 1) = 1.0;
  z(3, 0) = -1.0;
  return z;
}

// Dimensionless signature form diag(-1, 1, 1, -1).
inline Mat<4> eta() {
  Mat<4> m;
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  m(2, 2) = 1.0;
  m(3, 3) = -1.0;
  return m;
}

inline Mat<4> metric4(MetricKind kind, const Constants& k = {}) {
  Mat<4> m;
  switch (kind) {
    case MetricKind::symplectic:
      return zeta();
    case MetricKind::born_green:
      m(0, 0) = -1.0;
      m(1, 1) = 1.0 / (k.c * k.c);
      m(2, 2) = 1.0 / (k.b * k.b);
      m(3, 3) = -1.0 / (k.b * k.b * k.c * k.c);
      return m;
    case MetricKind::classical:
      m(0, 0) = -1.0;
      return m;
    case MetricKind::lorentz2:
      fail(errc::dimension_mismatch, "lorentz2 metric is 2x2");
  }
  fail(errc::invalid_argument, "unknown metric kind");
}

inline Mat<2> metric2(MetricKind kind, const Constants& k = {}) {
  if (kind != MetricKind::lorentz2)
    fail(errc::dimension_mismatch, "only the lorentz2 metric is 2x2");
  Mat<2> m;
  m(0, 0) = -1.0;
  m(1, 1) = 1.0 / (k.c * k.c);
  return m;
}

// Max-norm congruence residual |g^T M g - M| of a transform g against a
// metric M. Zero means g is an isometry of M.
template <int N>
double congruence_residual(const Mat<N>& metric, const Mat<N>& g) {
  return max_abs_diff(transpose(g) * metric * g, metric);
}

inline double congruence(MetricKind kind, const Mat<4>& g, const Constants& k = {}) {
  return congruence_residual(metric4(kind, k), g);
}

inline double congruence(MetricKind kind, const Mat<2>& g, const Constants& k = {}) {
  return congruence_residual(metric2(kind, k), g);
}

}  // namespace reciproca
