#include "reciproca/quaplectic.hpp"

#include <cmath>

#include "reciproca/hamilton.hpp"
#include "reciproca/metrics.hpp"
#include "reciproca/reciprocal.hpp"
#include "reciproca/rng.hpp"

namespace reciproca {

Mat<5> translation_element(const FrameVector& z) {
  Mat<5> m = Mat<5>::identity();
  m(0, 4) = z.dt;
  m(1, 4) = z.dq;
  m(2, 4) = z.dp;
  m(3, 4) = z.de;
  return m;
}

TranslationGenerators translation_generators() {
  TranslationGenerators g;
  g.T(0, 4) = 1.0;
  g.Q(1, 4) = 1.0;
  g.P(2, 4) = 1.0;
  g.E(3, 4) = 1.0;
  return g;
}

Mat<5> inhom_element(const Mat<4>& k, const FrameVector& z) {
  if (!all_finite(k)) fail(errc::invalid_argument, "boost block must be finite");
  Mat<5> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = k(i, j);
  const Vec<4> kz = k * z.slots();
  for (int i = 0; i < 4; ++i) m(i, 4) = kz[static_cast<std::size_t>(i)];
  m(4, 4) = 1.0;
  return m;
}

InhomElement inhom_compose(const InhomElement& first, const InhomElement& second) {
  InhomElement out;
  out.k = second.k * first.k;
  const Vec<4> shifted = inverse(first.k) * second.z.slots();
  out.z = FrameVector{first.z.dt + shifted[0], first.z.dq + shifted[1],
                      first.z.dp + shifted[2], first.z.de + shifted[3]};
  return out;
}

InhomElement inhom_inverse(const InhomElement& e) {
  InhomElement out;
  out.k = inverse(e.k);
  const Vec<4> kz = e.k * e.z.slots();
  out.z = FrameVector{-kz[0], -kz[1], -kz[2], -kz[3]};
  return out;
}

namespace {

template <int N>
Mat<N> embed4(const Mat<4>& k) {
  Mat<N> m = Mat<N>::identity();
  for (int i = 0; i < 4; ++i) m(i, i) = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = k(i, j);
  return m;
}

template <int N>
Mat<N> embed4_algebra(const Mat<4>& k) {
  Mat<N> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = k(i, j);
  return m;
}

}  // namespace

std::vector<Mat<5>> inhom_generators() {
  const Su11Generators hom = su11_generators();
  const TranslationGenerators tr = translation_generators();
  std::vector<Mat<5>> gens;
  gens.push_back(embed4_algebra<5>(hom.K));
  gens.push_back(embed4_algebra<5>(hom.N));
  gens.push_back(embed4_algebra<5>(hom.M));
  gens.push_back(embed4_algebra<5>(hom.U));
  gens.push_back(tr.T);
  gens.push_back(tr.Q);
  gens.push_back(tr.P);
  gens.push_back(tr.E);
  return gens;
}

StructureTable inhom_algebra_table() {
  return structure_table<5>({"K", "N", "M", "U", "T", "Q", "P", "E"}, inhom_generators());
}

double translation_casimir(const FrameVector& z, const Constants& k) {
  const double t = z.dt;
  const double q = z.dq / k.c;
  const double p = z.dp / k.b;
  const double e = z.de / (k.b * k.c);
  return -t * t + q * q + p * p - e * e;
}

Mat<6> heisenberg_element(const FrameVector& z, double iota) {
  if (!(std::isfinite(z.dt) && std::isfinite(z.dq) && std::isfinite(z.dp) &&
        std::isfinite(z.de) && std::isfinite(iota)))
    fail(errc::invalid_argument, "translation slots must be finite");
  Mat<6> m = Mat<6>::identity();
  m(0, 5) = z.dt;
  m(1, 5) = z.dq;
  m(2, 5) = z.dp;
  m(3, 5) = z.de;
  m(4, 0) = -z.de;
  m(4, 1) = z.dp;
  m(4, 2) = -z.dq;
  m(4, 3) = z.dt;
  m(4, 5) = 2.0 * iota;
  return m;
}

HeisenbergElement heisenberg_compose(const HeisenbergElement& first,
                                     const HeisenbergElement& second) {
  // Accumulates in the same order as the (4,5) entry of the matrix product,
  // so rebuilding the composite reproduces the product bit-for-bit.
  HeisenbergElement out;
  out.z = FrameVector{first.z.dt + second.z.dt, first.z.dq + second.z.dq,
                      first.z.dp + second.z.dp, first.z.de + second.z.de};
  double acc = (-second.z.de) * first.z.dt;
  acc += second.z.dp * first.z.dq;
  acc += (-second.z.dq) * first.z.dp;
  acc += second.z.dt * first.z.de;
  acc += 2.0 * first.iota;
  acc += 2.0 * second.iota;
  out.iota = 0.5 * acc;
  return out;
}

HeisenbergElement heisenberg_inverse(const HeisenbergElement& e) {
  return HeisenbergElement{FrameVector{-e.z.dt, -e.z.dq, -e.z.dp, -e.z.de}, -e.iota};
}

HeisenbergGenerators heisenberg_generators() {
  HeisenbergGenerators g;
  g.T(0, 5) = 1.0;
  g.T(4, 3) = -1.0;
  g.Q(1, 5) = 1.0;
  g.Q(4, 2) = 1.0;
  g.P(2, 5) = 1.0;
  g.P(4, 1) = -1.0;
  g.E(3, 5) = 1.0;
  g.E(4, 0) = 1.0;
  g.I(4, 5) = 2.0;
  return g;
}

Mat<6> heisenberg_algebra_element(const FrameVector& z, double iota) {
  const HeisenbergGenerators g = heisenberg_generators();
  return z.dt * g.T + z.dq * g.Q + z.dp * g.P + z.de * g.E + iota * g.I;
}

StructureTable heisenberg_algebra_table() {
  const HeisenbergGenerators g = heisenberg_generators();
  return structure_table<6>({"T", "Q", "P", "E", "I"}, {g.T, g.Q, g.P, g.E, g.I});
}

Mat<6> dilation(double epsilon) {
  if (!std::isfinite(epsilon)) fail(errc::invalid_argument, "dilation parameter must be finite");
  Mat<6> m = Mat<6>::identity();
  m(4, 4) = std::exp(epsilon);
  m(5, 5) = std::exp(-epsilon);
  return m;
}

HeisenbergElement dilation_apply(double epsilon, const HeisenbergElement& e) {
  const double s = std::exp(epsilon);
  HeisenbergElement out;
  out.z = FrameVector{e.z.dt * s, e.z.dq * s, e.z.dp * s, e.z.de * s};
  out.iota = ((s * (2.0 * e.iota)) * s) * 0.5;
  return out;
}

double symplectic_check(const Mat<4>& k) { return congruence_residual(zeta(), k); }

Mat<6> quaplectic_element(const QuaplecticElement& e, const Tolerance& tol) {
  if (symplectic_check(e.xi) > tol.abs_tol + tol.rel_tol * max_abs(e.xi))
    fail(errc::not_symplectic, "boost block must preserve the symplectic form");
  if (symplectic_check(e.varsigma) > tol.abs_tol)
    fail(errc::not_symplectic, "discrete block must preserve the symplectic form");
  if (std::fabs(e.varsigma_parity) != 1.0)
    fail(errc::invalid_argument, "discrete parity must be +1 or -1");
  Mat<6> sigma = embed4<6>(e.varsigma);
  sigma(4, 4) = e.varsigma_parity;
  sigma(5, 5) = e.varsigma_parity;
  return sigma * dilation(e.epsilon) * embed4<6>(e.xi) * heisenberg_element(e.z, e.iota);
}

QuaplecticParts quaplectic_extract(const Mat<6>& m, const Tolerance& tol) {
  const double thr = tol.abs_tol + tol.rel_tol * std::max(1.0, max_abs(m));
  // Structural zeros and ones of the epsilon = 0, trivial-discrete pattern.
  for (int j = 0; j < 5; ++j)
    if (std::fabs(m(5, j)) > thr) fail(errc::not_in_group, "bottom row is not (0,...,0,1)");
  if (std::fabs(m(5, 5) - 1.0) > thr) fail(errc::not_in_group, "bottom corner must be 1");
  if (std::fabs(m(4, 4) - 1.0) > thr) fail(errc::not_in_group, "central diagonal must be 1");
  for (int i = 0; i < 4; ++i)
    if (std::fabs(m(i, 4)) > thr) fail(errc::not_in_group, "central column must vanish");

  QuaplecticParts parts;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) parts.xi(i, j) = m(i, j);
  if (symplectic_check(parts.xi) > thr)
    fail(errc::not_in_group, "boost block does not preserve the symplectic form");

  const Vec<4> col{m(0, 5), m(1, 5), m(2, 5), m(3, 5)};
  const Vec<4> zv = inverse(parts.xi) * col;
  parts.z = FrameVector::from_slots(zv);
  parts.iota = 0.5 * m(4, 5);

  // Fifth row must pair with z through the symplectic form.
  const double row[4] = {-parts.z.de, parts.z.dp, -parts.z.dq, parts.z.dt};
  for (int j = 0; j < 4; ++j)
    if (std::fabs(m(4, j) - row[j]) > thr)
      fail(errc::not_in_group, "central row does not match the translation part");
  return parts;
}

std::vector<Mat<6>> quaplectic_generators() {
  const Su11Generators hom = su11_generators();
  const HeisenbergGenerators h = heisenberg_generators();
  std::vector<Mat<6>> gens;
  gens.push_back(embed4_algebra<6>(hom.K));
  gens.push_back(embed4_algebra<6>(hom.N));
  gens.push_back(embed4_algebra<6>(hom.M));
  gens.push_back(embed4_algebra<6>(hom.U));
  gens.push_back(h.T);
  gens.push_back(h.Q);
  gens.push_back(h.P);
  gens.push_back(h.E);
  gens.push_back(h.I);
  return gens;
}

StructureTable quaplectic_algebra_table() {
  return structure_table<6>({"K", "N", "M", "U", "T", "Q", "P", "E", "I"},
                            quaplectic_generators());
}

CocycleCheck contraction_check_h1(std::uint64_t seed, int cases) {
  if (cases <= 0) fail(errc::invalid_argument, "cases must be positive");
  Rng rng(seed);
  CocycleCheck report;
  report.cases = cases;
  double worst = 0.0;
  double worst_neg = 0.0;
  for (int n = 0; n < cases; ++n) {
    const RateParams r1{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                        0.0};
    const RateParams r2{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                        0.0};
    const RateParams law = hamilton_compose(r1, r2);

    // One-dimensional centrally extended translations on (v, f) with the
    // central coordinate iota = r/2, as 4x4 matrices.
    auto h1 = [](double v, double f, double iota) {
      Mat<4> m = Mat<4>::identity();
      m(0, 3) = v;
      m(1, 3) = f;
      m(2, 0) = -f;
      m(2, 1) = v;
      m(2, 3) = 2.0 * iota;
      return m;
    };
    const Mat<4> prod = h1(r2.v, r2.f, r2.r / 2.0) * h1(r1.v, r1.f, r1.r / 2.0);
    const double iota_matrix = 0.5 * prod(2, 3);
    const double scale = std::max(1.0, std::fabs(iota_matrix));
    worst = std::max(worst, std::fabs(iota_matrix - law.r / 2.0) / scale);
    worst = std::max(worst, std::fabs(prod(0, 3) - law.v) / scale);
    worst = std::max(worst, std::fabs(prod(1, 3) - law.f) / scale);

    // Negative control: the same law with one sign flipped in the cocycle.
    const double mutated = (r2.r + (-r2.f) * r1.v - r2.v * r1.f + r1.r) / 2.0;
    worst_neg = std::max(worst_neg, std::fabs(iota_matrix - mutated));
  }
  report.max_residual = worst;
  report.negative_control_residual = worst_neg;
  report.negative_control_failed = worst_neg > 1e-3;
  report.passed = worst <= 1e-13 && report.negative_control_failed;
  return report;
}

}  // namespace reciproca
