#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "reciproca/algebra.hpp"
#include "reciproca/constants.hpp"
#include "reciproca/mat.hpp"
#include "reciproca/metrics.hpp"
#include "reciproca/reciprocal.hpp"
#include "reciproca/rng.hpp"

using namespace reciproca;

TEST_CASE("matrix identity and product") {
  const Mat<4> id = Mat<4>::identity();
  Mat<4> m;
  m(0, 1) = 2.0;
  m(2, 3) = -1.5;
  m(3, 0) = 4.0;
  CHECK(id * m == m);
  CHECK(m * id == m);
  CHECK(max_abs_diff(transpose(transpose(m)), m) == 0.0);
}

TEST_CASE("matrix inverse round trip") {
  Mat<4> m = Mat<4>::identity();
  m(1, 0) = 0.7;
  m(2, 0) = -0.3;
  m(3, 1) = 0.2;
  m(0, 3) = 1.1;
  const Mat<4> inv = inverse(m);
  CHECK(max_abs_diff(m * inv, Mat<4>::identity()) < 1e-14);
  CHECK(max_abs_diff(inv * m, Mat<4>::identity()) < 1e-14);
}

TEST_CASE("singular matrix is rejected") {
  Mat<4> zero;
  CHECK(raises(errc::singular_matrix, [&] { return inverse(zero); }));
  Mat<2> collinear;
  collinear(0, 0) = 1.0;
  collinear(0, 1) = 2.0;
  collinear(1, 0) = 2.0;
  collinear(1, 1) = 4.0;
  CHECK(raises(errc::singular_matrix, [&] { return inverse(collinear); }));
  CHECK(determinant(collinear) == 0.0);
}

TEST_CASE("determinant of a known matrix") {
  Mat<2> m;
  m(0, 0) = 3.0;
  m(0, 1) = 1.0;
  m(1, 0) = 2.0;
  m(1, 1) = 5.0;
  CHECK(determinant(m) == doctest::Approx(13.0).epsilon(1e-14));
}

TEST_CASE("bracket is antisymmetric") {
  Mat<4> x, y;
  x(0, 1) = 1.0;
  x(2, 3) = -2.0;
  y(1, 0) = 0.5;
  y(3, 2) = 1.5;
  CHECK(max_abs_diff(bracket(x, y), -1.0 * bracket(y, x)) == 0.0);
}

TEST_CASE("symplectic form squares to minus identity") {
  const Mat<4> z = zeta();
  CHECK(max_abs_diff(z * z, -1.0 * Mat<4>::identity()) == 0.0);
  CHECK(max_abs_diff(transpose(z), -1.0 * z) == 0.0);
}

TEST_CASE("metric matrices") {
  const Constants k = make_constants(2.0, 3.0);
  const Mat<4> bg = metric4(MetricKind::born_green, k);
  CHECK(bg(0, 0) == -1.0);
  CHECK(bg(1, 1) == 1.0 / 4.0);
  CHECK(bg(2, 2) == 1.0 / 9.0);
  CHECK(bg(3, 3) == -1.0 / 36.0);
  CHECK(metric4(MetricKind::classical)(0, 0) == -1.0);
  CHECK(metric2(MetricKind::lorentz2, k)(1, 1) == 0.25);
  CHECK(raises(errc::dimension_mismatch, [&] { return metric4(MetricKind::lorentz2); }));
  CHECK(raises(errc::dimension_mismatch, [&] { return metric2(MetricKind::born_green); }));
  // Dimensionless two-scale metric coincides with the signature form.
  CHECK(max_abs_diff(metric4(MetricKind::born_green, Constants{}), eta()) == 0.0);
}

TEST_CASE("congruence residual flags non isometries") {
  CHECK(congruence_residual(zeta(), Mat<4>::identity()) == 0.0);
  CHECK(congruence(MetricKind::symplectic, 2.0 * Mat<4>::identity()) == 3.0);
}

TEST_CASE("frame scaling round trip") {
  const Constants k = make_constants(3.0, 0.5, 2.0);
  const FrameVector z{0.3, -1.2, 0.7, 0.25, 0.4};
  const FrameVector back = dimensionalize(nondimensionalize(z, k), k);
  CHECK(back.dt == doctest::Approx(z.dt).epsilon(1e-14));
  CHECK(back.dq == doctest::Approx(z.dq).epsilon(1e-14));
  CHECK(back.dp == doctest::Approx(z.dp).epsilon(1e-14));
  CHECK(back.de == doctest::Approx(z.de).epsilon(1e-14));
  CHECK(back.diota == doctest::Approx(z.diota).epsilon(1e-14));
  // Scales multiply back to the defining combinations.
  CHECK(k.lambda_t() * k.lambda_e() == doctest::Approx(k.hbar).epsilon(1e-14));
  CHECK(k.lambda_q() * k.lambda_p() == doctest::Approx(k.hbar).epsilon(1e-14));
  CHECK(k.lambda_q() / k.lambda_t() == doctest::Approx(k.c).epsilon(1e-14));
  CHECK(k.lambda_p() / k.lambda_t() == doctest::Approx(k.b).epsilon(1e-14));
}

TEST_CASE("constants must be positive and finite") {
  CHECK(raises(errc::invalid_argument, [] { return make_constants(0.0, 1.0); }));
  CHECK(raises(errc::invalid_argument, [] { return make_constants(1.0, -2.0); }));
  CHECK(raises(errc::invalid_argument, [] { return make_constants(1.0, 1.0, 0.0); }));
}

TEST_CASE("rng stream is deterministic and bounded") {
  Rng a(99), b(99);
  for (int i = 0; i < 32; ++i) CHECK(a.uniform() == b.uniform());
  Rng r(7);
  for (int i = 0; i < 256; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double s = r.uniform(-2.0, 3.0);
    CHECK(s >= -2.0);
    CHECK(s < 3.0);
    const long long n = r.integer(-3, 3);
    CHECK(n >= -3);
    CHECK(n <= 3);
  }
}

TEST_CASE("error names are stable") {
  CHECK(std::string(errc_name(errc::superluminal_rate)) == "SuperluminalRate");
  CHECK(std::string(errc_name(errc::degenerate_denominator)) == "DegenerateDenominator");
  const error e(errc::not_in_group, "probe");
  CHECK(e.code() == errc::not_in_group);
  CHECK(std::string(e.what()) == "NotInGroup: probe");
}

TEST_CASE("structure table on a closed generator set") {
  const Su11Generators g = su11_generators();
  const StructureTable t = structure_table<4>({"K", "N", "M"}, {g.K, g.N, g.M});
  CHECK(t.closed);
  CHECK(t.exact_integer);
  CHECK(t.max_residual == 0.0);
  CHECK(t.c(0, 1, 2) == 2.0);
  CHECK(t.entry_text(0, 1) == "2 M");
  CHECK(t.entry_text(1, 0) == "-2 M");
}

TEST_CASE("structure table rejects dependent generators") {
  const Su11Generators g = su11_generators();
  CHECK(raises(errc::rank_deficient,
               [&] { return structure_table<4>({"K", "K2"}, {g.K, g.K}); }));
}

TEST_CASE("reference diff reports mismatched brackets") {
  const Su11Generators g = su11_generators();
  const StructureTable t = structure_table<4>({"K", "N", "M"}, {g.K, g.N, g.M});
  std::vector<ReferenceBracket> good = {{0, 1, {{2, 2.0}}},
                                        {0, 2, {{1, 2.0}}},
                                        {1, 2, {{0, -2.0}}}};
  CHECK(diff_against_reference(t, good).identical);
  std::vector<ReferenceBracket> bad = {{0, 1, {{2, -2.0}}},
                                       {0, 2, {{1, 2.0}}},
                                       {1, 2, {{0, -2.0}}}};
  const TableDiff d = diff_against_reference(t, bad);
  CHECK_FALSE(d.identical);
  REQUIRE(d.lines.size() == 1);
  CHECK(d.lines[0].find("[K,N]") != std::string::npos);
}
