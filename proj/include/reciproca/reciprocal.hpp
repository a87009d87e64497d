#pragma once

#include "reciproca/constants.hpp"
#include "reciproca/hamilton.hpp"
#include "reciproca/mat.hpp"

namespace reciproca {

// Squared rate magnitude w^2 = (v/c)^2 + (f/b)^2 - (r/(bc))^2. The r
// direction is compact, so w^2 may be negative; boosts require w^2 < 1.
double rate_w2(const RateParams& p, const Constants& k = {});

// Rate boost on (dt, dq, dp, de) mixing time, position, momentum and energy:
//   gamma_w * [[1,    v/c^2, f/b^2, -r/(b^2 c^2)],
//              [v,    1,     r/b^2, -f/b^2      ],
//              [f,   -r/c^2, 1,      v/c^2      ],
//              [r,   -f,     v,      1          ]].
// Preserves both the symplectic and the two-scale symmetric metric.
Mat<4> xi_su11(double v, double f, double r, const Constants& k = {});

// Central rotation by theta with tan(theta) = a/(bc); commutes with every
// xi_su11 element.
Mat<4> xi_u1(double a, const Constants& k = {});

// Full element xi_u1(a) * xi_su11(v, f, r).
Mat<4> xi_u11(const RateParams& p, const Constants& k = {});

// Rate composition law: parameters of xi_su11(r2) * xi_su11(r1). Inputs may
// sit on the closure w^2 = 1 (the law saturates there); the composite must
// keep a positive denominator or DegenerateDenominator is raised.
RateParams rate_add(const RateParams& r1, const RateParams& r2, const Constants& k = {});

// b -> infinity contraction of xi_su11: velocity block stays relativistic,
// force and power act as shears.
Mat<4> limit_b(double v, double f, double r, const Constants& k = {});

// b, c -> infinity contraction: coincides with hamilton_element.
Mat<4> limit_bc(double v, double f, double r);

struct Su11Generators {
  Mat<4> K;  // velocity boost direction
  Mat<4> N;  // force boost direction
  Mat<4> M;  // power boost direction
  Mat<4> U;  // central rotation direction
};

// Dimensionless generators (c = b = 1) by default; the overload carries the
// 1/c^2, 1/b^2 entry scalings.
Su11Generators su11_generators();
Su11Generators su11_generators(const Constants& k);

struct ContractedGenerators {
  Mat<4> G;     // c -> infinity limit of K
  Mat<4> F;     // b -> infinity limit of N
  Mat<4> R;     // full contraction of M (and of U)
  Mat<4> Mhat;  // b -> infinity limit of M
};

ContractedGenerators contracted_generators();

// Boost from hyperbolic parameters (beta, gamma_f, vartheta) with
// omega^2 = beta^2 + gamma_f^2 - vartheta^2 >= 0, built from the exponential
// closed form cosh/sinh(omega). Raises ImaginaryOmega for omega^2 < 0.
Mat<4> hyperbolic_xi(double beta, double gamma_f, double vartheta, const Constants& k = {});

// Rate parameters equivalent to the hyperbolic parameters:
// v = c beta tanh(omega)/omega, f = b gamma_f tanh(omega)/omega,
// r = b c vartheta tanh(omega)/omega.
RateParams rates_from_hyperbolic(double beta, double gamma_f, double vartheta,
                                 const Constants& k = {});

// Read (v, f, r) off the first column of a boost matrix (column 0 is
// gamma_w * (1, v, f, r) in any units).
RateParams su11_extract(const Mat<4>& m);

// Recover (v, f, r, a) from a full group element and verify by rebuilding;
// raises NotInGroup when the matrix is not of the boost * rotation form.
RateParams u11_extract(const Mat<4>& m, const Constants& k = {}, const Tolerance& tol = {});

}  // namespace reciproca
