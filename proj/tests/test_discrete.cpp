#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "reciproca/discrete.hpp"
#include "reciproca/metrics.hpp"
#include "reciproca/reciprocal.hpp"
#include "reciproca/rng.hpp"

using namespace reciproca;

TEST_CASE("labels and defining elements") {
  const std::vector<std::string> labels = discrete_labels();
  REQUIRE(labels.size() == 16);
  CHECK(labels[0] == "0");
  CHECK(std::find(labels.begin(), labels.end(), "CR") != labels.end());

  const Mat<4> q = discrete_element("Q").m;
  const Mat<4> e = discrete_element("E").m;
  // The two quarter turns compose to the symplectic form itself.
  CHECK(max_abs_diff(q * e, zeta()) == 0.0);
  CHECK(max_abs_diff(discrete_element("R").m, zeta()) == 0.0);

  // Squares give the reflections, and their product is the full inversion.
  Mat<4> parity = Mat<4>::identity();
  parity(1, 1) = -1.0;
  parity(2, 2) = -1.0;
  CHECK(max_abs_diff(q * q, parity) == 0.0);
  CHECK(max_abs_diff(discrete_element("P").m, parity) == 0.0);
  Mat<4> treverse = Mat<4>::identity();
  treverse(0, 0) = -1.0;
  treverse(3, 3) = -1.0;
  CHECK(max_abs_diff(e * e, treverse) == 0.0);
  CHECK(max_abs_diff(discrete_element("C").m, -1.0 * Mat<4>::identity()) == 0.0);

  CHECK(raises(errc::unknown_label, [] { return discrete_element("X"); }));
  CHECK(raises(errc::unknown_label, [] { return discrete_element(""); }));
}

TEST_CASE("extended labels carry a central parity") {
  const DiscreteElement e = discrete_element("Q-");
  CHECK(e.parity == -1);
  CHECK(max_abs_diff(e.m, discrete_element("Q").m) == 0.0);
  const Mat<6> m6 = discrete_element6(e);
  CHECK(m6(4, 4) == -1.0);
  CHECK(m6(5, 5) == -1.0);
  CHECK(m6(1, 2) == -1.0);
  CHECK(discrete_element("0+").parity == +1);
}

TEST_CASE("closure of the generated group") {
  const ClosureTable t = discrete_table(false);
  CHECK(t.order == 16);
  CHECK(t.closed);
  CHECK(t.abelian);
  CHECK(t.signed_permutations);
  CHECK(t.inverses_are_transposes);
  for (int idx : t.cayley) CHECK(idx >= 0);
  // Every canonical label appears exactly once.
  for (const auto& l : discrete_labels())
    CHECK(std::count(t.labels.begin(), t.labels.end(), l) == 1);
  const std::string text = t.cayley_text();
  CHECK(text.find("CR") != std::string::npos);

  const ClosureTable ext = discrete_table(true);
  CHECK(ext.order == 32);
  CHECK(ext.closed);
  CHECK(ext.abelian);
  CHECK(std::count(ext.labels.begin(), ext.labels.end(), "R-") == 1);
}

TEST_CASE("tabulated relations hold except the two contradictory ones") {
  const std::vector<RelationCheck> rels = discrete_relations();
  REQUIRE(rels.size() == 12);
  int failing = 0;
  for (const auto& r : rels) {
    if (r.holds) {
      CHECK(r.residual == 0.0);
    } else {
      ++failing;
      CHECK(r.residual >= 1.0);
    }
  }
  CHECK(failing == 2);
  CHECK_FALSE(rels[10].holds);  // E*R = Q in the tabulated list
  CHECK(rels[10].text.find("[computed: TQ]") != std::string::npos);
  CHECK_FALSE(rels[11].holds);  // R*Q = E in the tabulated list
  CHECK(rels[11].text.find("[computed: PE]") != std::string::npos);
}

TEST_CASE("every element preserves both invariant forms exactly") {
  for (const auto& label : discrete_labels()) {
    const InvarianceReport r = discrete_invariance_check(discrete_element(label));
    CHECK(r.invariant);
    CHECK(r.symplectic_residual == 0.0);
    CHECK(r.symmetric_residual == 0.0);
  }
}

TEST_CASE("conjugation action on rate parameters") {
  Rng rng(51);
  for (int i = 0; i < 40; ++i) {
    RateParams p{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5),
                 rng.uniform(-0.5, 0.5)};
    if (rate_w2(p, Constants{}) >= 0.95) continue;

    const RateParams via_q = discrete_automorphism(discrete_element("Q"), p);
    CHECK(via_q.v == doctest::Approx(-p.f).epsilon(1e-10));
    CHECK(via_q.f == doctest::Approx(p.v).epsilon(1e-10));
    CHECK(via_q.r == doctest::Approx(p.r).epsilon(1e-10));
    CHECK(via_q.a == doctest::Approx(p.a).epsilon(1e-10));

    for (const char* refl : {"P", "T"}) {
      const RateParams via = discrete_automorphism(discrete_element(refl), p);
      CHECK(via.v == doctest::Approx(-p.v).epsilon(1e-10));
      CHECK(via.f == doctest::Approx(-p.f).epsilon(1e-10));
      CHECK(via.r == doctest::Approx(p.r).epsilon(1e-10));
      CHECK(via.a == doctest::Approx(p.a).epsilon(1e-10));
    }

    const RateParams via_c = discrete_automorphism(discrete_element("C"), p);
    CHECK(via_c.v == doctest::Approx(p.v).epsilon(1e-10));
    CHECK(via_c.f == doctest::Approx(p.f).epsilon(1e-10));

    // Generic property: the conjugate matrix is the rebuilt element.
    for (const char* label : {"E", "R", "TQ"}) {
      const DiscreteElement s = discrete_element(label);
      const RateParams via = discrete_automorphism(s, p);
      CHECK(max_abs_diff(s.m * xi_u11(p) * transpose(s.m), xi_u11(via)) < 1e-9);
    }
  }
}

TEST_CASE("quarter turn conjugation leaves the family when the scales differ") {
  const Constants k = make_constants(2.0, 1.0);
  CHECK(raises(errc::not_in_group, [&] {
    return discrete_automorphism(discrete_element("Q"), RateParams{0.2, 0.3, 0.1, 0.0}, k);
  }));
}

TEST_CASE("frame action of the position momentum quarter turn") {
  const FrameVector z{1.0, 2.0, 3.0, 4.0};
  const FrameVector out = discrete_frame_action(discrete_element("Q"), z);
  CHECK(out.dt == 1.0);
  CHECK(out.dq == -3.0);
  CHECK(out.dp == 2.0);
  CHECK(out.de == 4.0);
}
