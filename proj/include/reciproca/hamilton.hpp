#pragma once

#include "reciproca/constants.hpp"
#include "reciproca/mat.hpp"

namespace reciproca {

// Rate parameters of a transformation: velocity v, force f, power r, and the
// central rotation parameter a (nonzero only in the full unitary group).
struct RateParams {
  double v = 0.0;
  double f = 0.0;
  double r = 0.0;
  double a = 0.0;
};

// Nilpotent rate boost on (dt, dq, dp, de):
//   [[1, 0, 0, 0],
//    [v, 1, 0, 0],
//    [f, 0, 1, 0],
//    [r, -f, v, 1]].
// Requires a == 0 (the central parameter does not survive the contraction).
Mat<4> hamilton_element(const RateParams& p);

// Group law: apply `first`, then `second`. The third slot picks up the
// symplectic cross term of the two (v, f) pairs.
RateParams hamilton_compose(const RateParams& first, const RateParams& second);

RateParams hamilton_inverse(const RateParams& p);

struct HamiltonGenerators {
  Mat<4> G;  // velocity direction
  Mat<4> F;  // force direction
  Mat<4> R;  // central power direction
};

HamiltonGenerators hamilton_generators();

}  // namespace reciproca
