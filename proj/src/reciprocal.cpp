#include "reciproca/reciprocal.hpp"

#include <cmath>

namespace reciproca {

namespace {

constexpr double kBoundGuard = 1e-15;

void check_finite(const RateParams& p) {
  if (!(std::isfinite(p.v) && std::isfinite(p.f) && std::isfinite(p.r) && std::isfinite(p.a)))
    fail(errc::invalid_argument, "rate parameters must be finite");
}

}  // namespace

double rate_w2(const RateParams& p, const Constants& k) {
  const double bv = p.v / k.c;
  const double bf = p.f / k.b;
  const double br = p.r / (k.b * k.c);
  return bv * bv + bf * bf - br * br;
}

Mat<4> xi_su11(double v, double f, double r, const Constants& k) {
  check_finite(RateParams{v, f, r, 0.0});
  const double w2 = rate_w2(RateParams{v, f, r, 0.0}, k);
  if (w2 >= 1.0 - kBoundGuard)
    fail(errc::rate_bound_exceeded, "rate magnitude w^2 must stay below 1");
  const double g = 1.0 / std::sqrt(1.0 - w2);
  const double c2 = k.c * k.c;
  const double b2 = k.b * k.b;
  Mat<4> m;
  m(0, 0) = g;
  m(0, 1) = g * v / c2;
  m(0, 2) = g * f / b2;
  m(0, 3) = -g * r / (b2 * c2);
  m(1, 0) = g * v;
  m(1, 1) = g;
  m(1, 2) = g * r / b2;
  m(1, 3) = -g * f / b2;
  m(2, 0) = g * f;
  m(2, 1) = -g * r / c2;
  m(2, 2) = g;
  m(2, 3) = g * v / c2;
  m(3, 0) = g * r;
  m(3, 1) = -g * f;
  m(3, 2) = g * v;
  m(3, 3) = g;
  return m;
}

Mat<4> xi_u1(double a, const Constants& k) {
  if (!std::isfinite(a)) fail(errc::invalid_argument, "rotation parameter must be finite");
  const double bc = k.b * k.c;
  const double t = a / bc;
  const double ct = 1.0 / std::sqrt(1.0 + t * t);
  const double c2 = k.c * k.c;
  const double b2 = k.b * k.b;
  Mat<4> m;
  m(0, 0) = ct;
  m(0, 3) = -ct * a / (b2 * c2);
  m(1, 1) = ct;
  m(1, 2) = -ct * a / b2;
  m(2, 1) = ct * a / c2;
  m(2, 2) = ct;
  m(3, 0) = ct * a;
  m(3, 3) = ct;
  return m;
}

Mat<4> xi_u11(const RateParams& p, const Constants& k) {
  return xi_u1(p.a, k) * xi_su11(p.v, p.f, p.r, k);
}

RateParams rate_add(const RateParams& r1, const RateParams& r2, const Constants& k) {
  check_finite(r1);
  check_finite(r2);
  if (r1.a != 0.0 || r2.a != 0.0)
    fail(errc::nonzero_u1_param, "rate composition acts on the boost sector only");
  // The law itself is defined on the closed chart, so the saturated boundary
  // w^2 = 1 is accepted even though the boost matrix does not exist there.
  if (rate_w2(r1, k) > 1.0 + 1e-12 || rate_w2(r2, k) > 1.0 + 1e-12)
    fail(errc::rate_bound_exceeded, "rate magnitude w^2 must not exceed 1");
  const double c2 = k.c * k.c;
  const double b2 = k.b * k.b;
  const double den =
      1.0 + r1.v * r2.v / c2 + r1.f * r2.f / b2 - r1.r * r2.r / (b2 * c2);
  if (den < 1e-12)
    fail(errc::degenerate_denominator, "composition denominator is not positive");
  RateParams out;
  out.v = (r2.v + r1.v + (r2.r * r1.f - r2.f * r1.r) / b2) / den;
  out.f = (r2.f + r1.f + (r2.v * r1.r - r2.r * r1.v) / c2) / den;
  out.r = (r2.r + r1.r + r2.v * r1.f - r2.f * r1.v) / den;
  out.a = 0.0;
  return out;
}

Mat<4> limit_b(double v, double f, double r, const Constants& k) {
  check_finite(RateParams{v, f, r, 0.0});
  if (std::fabs(v) >= k.c * (1.0 - kBoundGuard))
    fail(errc::superluminal_rate, "|v| must stay below c");
  const double beta = v / k.c;
  const double g = 1.0 / std::sqrt(1.0 - beta * beta);
  const double c2 = k.c * k.c;
  Mat<4> m;
  m(0, 0) = g;
  m(0, 1) = g * v / c2;
  m(1, 0) = g * v;
  m(1, 1) = g;
  m(2, 0) = g * f;
  m(2, 1) = -g * r / c2;
  m(2, 2) = g;
  m(2, 3) = g * v / c2;
  m(3, 0) = g * r;
  m(3, 1) = -g * f;
  m(3, 2) = g * v;
  m(3, 3) = g;
  return m;
}

Mat<4> limit_bc(double v, double f, double r) {
  return hamilton_element(RateParams{v, f, r, 0.0});
}

Su11Generators su11_generators() { return su11_generators(Constants{1.0, 1.0, 1.0, 1.0}); }

Su11Generators su11_generators(const Constants& k) {
  const double c2 = k.c * k.c;
  const double b2 = k.b * k.b;
  Su11Generators g;
  g.K(0, 1) = 1.0 / c2;
  g.K(1, 0) = 1.0;
  g.K(2, 3) = 1.0 / c2;
  g.K(3, 2) = 1.0;
  g.N(0, 2) = 1.0 / b2;
  g.N(1, 3) = -1.0 / b2;
  g.N(2, 0) = 1.0;
  g.N(3, 1) = -1.0;
  g.M(0, 3) = -1.0 / (b2 * c2);
  g.M(1, 2) = 1.0 / b2;
  g.M(2, 1) = -1.0 / c2;
  g.M(3, 0) = 1.0;
  g.U(0, 3) = -1.0 / (b2 * c2);
  g.U(1, 2) = -1.0 / b2;
  g.U(2, 1) = 1.0 / c2;
  g.U(3, 0) = 1.0;
  return g;
}

ContractedGenerators contracted_generators() {
  ContractedGenerators g;
  g.G(1, 0) = 1.0;
  g.G(3, 2) = 1.0;
  g.F(2, 0) = 1.0;
  g.F(3, 1) = -1.0;
  g.R(3, 0) = 1.0;
  g.Mhat(2, 1) = -1.0;
  g.Mhat(3, 0) = 1.0;
  return g;
}

namespace {

// sinh(w)/w and tanh(w)/w with series guards near zero.
double sinhc(double w) {
  if (std::fabs(w) < 1e-4) {
    const double w2 = w * w;
    return 1.0 + w2 / 6.0 + w2 * w2 / 120.0;
  }
  return std::sinh(w) / w;
}

double tanhc(double w) {
  if (std::fabs(w) < 1e-4) {
    const double w2 = w * w;
    return 1.0 - w2 / 3.0 + 2.0 * w2 * w2 / 15.0;
  }
  return std::tanh(w) / w;
}

double omega_from(double beta, double gamma_f, double vartheta) {
  if (!(std::isfinite(beta) && std::isfinite(gamma_f) && std::isfinite(vartheta)))
    fail(errc::invalid_argument, "hyperbolic parameters must be finite");
  const double w2 = beta * beta + gamma_f * gamma_f - vartheta * vartheta;
  if (w2 < 0.0)
    fail(errc::imaginary_omega, "omega^2 = beta^2 + gamma^2 - vartheta^2 is negative");
  return std::sqrt(w2);
}

}  // namespace

Mat<4> hyperbolic_xi(double beta, double gamma_f, double vartheta, const Constants& k) {
  const double omega = omega_from(beta, gamma_f, vartheta);
  const Su11Generators gen = su11_generators(k);
  // A = beta*c*K + gamma*b*N + vartheta*b*c*M squares to omega^2 * I, so the
  // exponential collapses to cosh(omega) I + sinh(omega)/omega * A.
  const Mat<4> a =
      beta * k.c * gen.K + gamma_f * k.b * gen.N + (vartheta * k.b * k.c) * gen.M;
  return std::cosh(omega) * Mat<4>::identity() + sinhc(omega) * a;
}

RateParams rates_from_hyperbolic(double beta, double gamma_f, double vartheta,
                                 const Constants& k) {
  const double omega = omega_from(beta, gamma_f, vartheta);
  const double t = tanhc(omega);
  return RateParams{k.c * beta * t, k.b * gamma_f * t, k.b * k.c * vartheta * t, 0.0};
}

RateParams su11_extract(const Mat<4>& m) {
  if (!(m(0, 0) > 0.0))
    fail(errc::not_in_group, "matrix is outside the boost chart");
  return RateParams{m(1, 0) / m(0, 0), m(2, 0) / m(0, 0), m(3, 0) / m(0, 0), 0.0};
}

RateParams u11_extract(const Mat<4>& m, const Constants& k, const Tolerance& tol) {
  const double c2 = k.c * k.c;
  const double b2 = k.b * k.b;
  const double scale = (m(0, 0) + m(1, 1)) / 2.0;  // cos(theta) * gamma_w
  if (!(scale > tol.abs_tol))
    fail(errc::not_in_group, "matrix is outside the boost-rotation chart");
  RateParams p;
  p.a = (m(3, 0) + c2 * m(2, 1)) / (2.0 * scale);
  p.r = (m(3, 0) - c2 * m(2, 1)) / (2.0 * scale);
  const double s = 1.0 + (p.a / (k.b * k.c)) * (p.a / (k.b * k.c));
  p.v = (m(1, 0) + p.a * m(2, 0) / b2) / (scale * s);
  p.f = (m(2, 0) - p.a * m(1, 0) / c2) / (scale * s);
  Mat<4> rebuilt;
  try {
    rebuilt = xi_u11(p, k);
  } catch (const error&) {
    fail(errc::not_in_group, "extracted parameters do not form a group element");
  }
  const double residual = max_abs_diff(rebuilt, m);
  if (residual > tol.abs_tol + tol.rel_tol * std::max(1.0, max_abs(m)))
    fail(errc::not_in_group, "matrix does not match its reconstructed group element");
  return p;
}

}  // namespace reciproca
