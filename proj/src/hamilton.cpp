#include "reciproca/hamilton.hpp"

#include <cmath>

namespace reciproca {

Mat<4> hamilton_element(const RateParams& p) {
  if (!(std::isfinite(p.v) && std::isfinite(p.f) && std::isfinite(p.r)))
    fail(errc::invalid_argument, "rate parameters must be finite");
  if (p.a != 0.0)
    fail(errc::nonzero_u1_param, "central rotation parameter must vanish here");
  Mat<4> m = Mat<4>::identity();
  m(1, 0) = p.v;
  m(2, 0) = p.f;
  m(3, 0) = p.r;
  m(3, 1) = -p.f;
  m(3, 2) = p.v;
  return m;
}

RateParams hamilton_compose(const RateParams& first, const RateParams& second) {
  // Matches hamilton_element(second) * hamilton_element(first) exactly: the
  // cross term accumulates in the same order as the matrix product row.
  RateParams out;
  out.v = second.v + first.v;
  out.f = second.f + first.f;
  out.r = second.r + (-second.f) * first.v + second.v * first.f + first.r;
  out.a = 0.0;
  if (first.a != 0.0 || second.a != 0.0)
    fail(errc::nonzero_u1_param, "central rotation parameter must vanish here");
  return out;
}

RateParams hamilton_inverse(const RateParams& p) {
  if (p.a != 0.0)
    fail(errc::nonzero_u1_param, "central rotation parameter must vanish here");
  return RateParams{-p.v, -p.f, -p.r, 0.0};
}

HamiltonGenerators hamilton_generators() {
  HamiltonGenerators g;
  g.G(1, 0) = 1.0;
  g.G(3, 2) = 1.0;
  g.F(2, 0) = 1.0;
  g.F(3, 1) = -1.0;
  g.R(3, 0) = 1.0;
  return g;
}

}  // namespace reciproca
