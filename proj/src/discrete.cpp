#include "reciproca/discrete.hpp"

#include <algorithm>
#include <cstddef>

#include "reciproca/metrics.hpp"
#include "reciproca/reciprocal.hpp"

namespace reciproca {

namespace {

Mat<4> quarter_turn_qp() {
  // dq -> -dp, dp -> dq
  Mat<4> m;
  m(0, 0) = 1.0;
  m(1, 2) = -1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

Mat<4> quarter_turn_te() {
  // dt -> de on the top slot, de -> -dt on the bottom
  Mat<4> m;
  m(0, 3) = 1.0;
  m(1, 1) = 1.0;
  m(2, 2) = 1.0;
  m(3, 0) = -1.0;
  return m;
}

// Every element is quarter_turn_qp^i * quarter_turn_te^j for i, j in 0..3.
Mat<4> power_product(int i, int j) {
  const Mat<4> q = quarter_turn_qp();
  const Mat<4> e = quarter_turn_te();
  Mat<4> m = Mat<4>::identity();
  for (int n = 0; n < i; ++n) m = m * q;
  for (int n = 0; n < j; ++n) m = m * e;
  return m;
}

struct LabeledPower {
  const char* label;
  int i;
  int j;
};

// Canonical names for the sixteen (i, j) exponent pairs.
constexpr LabeledPower kPowers[16] = {
    {"0", 0, 0},  {"P", 2, 0},  {"T", 0, 2},  {"C", 2, 2},
    {"Q", 1, 0},  {"E", 0, 1},  {"R", 1, 1},  {"PQ", 3, 0},
    {"PE", 2, 1}, {"PR", 3, 1}, {"TQ", 1, 2}, {"TE", 0, 3},
    {"TR", 1, 3}, {"CQ", 3, 2}, {"CE", 2, 3}, {"CR", 3, 3},
};

std::string label_of(const Mat<4>& m) {
  for (const auto& p : kPowers)
    if (power_product(p.i, p.j) == m) return p.label;
  return "?";
}

bool is_signed_permutation4(const Mat<4>& m) {
  for (int i = 0; i < 4; ++i) {
    int row_nonzero = 0, col_nonzero = 0;
    for (int j = 0; j < 4; ++j) {
      const double r = m(i, j), c = m(j, i);
      if (r != 0.0) {
        if (r != 1.0 && r != -1.0) return false;
        ++row_nonzero;
      }
      if (c != 0.0) ++col_nonzero;
    }
    if (row_nonzero != 1 || col_nonzero != 1) return false;
  }
  return true;
}

struct SignedElement {
  Mat<4> m;
  int parity = +1;
  bool operator==(const SignedElement& o) const { return parity == o.parity && m == o.m; }
};

}  // namespace

std::vector<std::string> discrete_labels() {
  std::vector<std::string> out;
  for (const auto& p : kPowers) out.push_back(p.label);
  return out;
}

DiscreteElement discrete_element(const std::string& label) {
  std::string base = label;
  int parity = +1;
  if (!base.empty() && (base.back() == '+' || base.back() == '-')) {
    parity = base.back() == '-' ? -1 : +1;
    base.pop_back();
  }
  for (const auto& p : kPowers)
    if (base == p.label) return DiscreteElement{label, power_product(p.i, p.j), parity};
  fail(errc::unknown_label, "unknown discrete element label: " + label);
}

Mat<6> discrete_element6(const DiscreteElement& e) {
  Mat<6> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = e.m(i, j);
  m(4, 4) = static_cast<double>(e.parity);
  m(5, 5) = static_cast<double>(e.parity);
  return m;
}

std::string ClosureTable::cayley_text() const {
  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.size());
  auto pad = [width](const std::string& s) {
    return s + std::string(width + 1 - s.size(), ' ');
  };
  std::string out = pad("*");
  for (const auto& l : labels) out += pad(l);
  out += "\n";
  for (int i = 0; i < order; ++i) {
    out += pad(labels[static_cast<std::size_t>(i)]);
    for (int j = 0; j < order; ++j)
      out += pad(labels[static_cast<std::size_t>(cayley[static_cast<std::size_t>(i) * order + j])]);
    out += "\n";
  }
  return out;
}

ClosureTable discrete_table(bool extended) {
  std::vector<SignedElement> gens;
  gens.push_back({discrete_element("P").m, +1});
  gens.push_back({discrete_element("T").m, +1});
  gens.push_back({discrete_element("Q").m, +1});
  gens.push_back({discrete_element("E").m, +1});
  if (extended) gens.push_back({Mat<4>::identity(), -1});

  // Breadth-first closure under right multiplication, exact comparisons.
  std::vector<SignedElement> els;
  els.push_back({Mat<4>::identity(), +1});
  for (std::size_t head = 0; head < els.size(); ++head) {
    for (const auto& g : gens) {
      SignedElement next{els[head].m * g.m, els[head].parity * g.parity};
      if (std::find(els.begin(), els.end(), next) == els.end()) els.push_back(next);
    }
  }

  ClosureTable t;
  t.extended = extended;
  t.order = static_cast<int>(els.size());
  t.closed = true;
  t.abelian = true;
  t.signed_permutations = true;
  t.inverses_are_transposes = true;
  t.cayley.assign(static_cast<std::size_t>(t.order) * t.order, -1);

  for (const auto& e : els) {
    std::string l = label_of(e.m);
    if (extended) l += e.parity > 0 ? "+" : "-";
    t.labels.push_back(l);
    t.matrices.push_back(e.m);
    t.parities.push_back(e.parity);
    if (!is_signed_permutation4(e.m)) t.signed_permutations = false;
    if (!(e.m * transpose(e.m) == Mat<4>::identity())) t.inverses_are_transposes = false;
  }

  for (int i = 0; i < t.order; ++i) {
    for (int j = 0; j < t.order; ++j) {
      const SignedElement prod{els[static_cast<std::size_t>(i)].m * els[static_cast<std::size_t>(j)].m,
                               els[static_cast<std::size_t>(i)].parity *
                                   els[static_cast<std::size_t>(j)].parity};
      const auto it = std::find(els.begin(), els.end(), prod);
      if (it == els.end()) {
        t.closed = false;
        continue;
      }
      t.cayley[static_cast<std::size_t>(i) * t.order + j] =
          static_cast<int>(it - els.begin());
      const SignedElement swapped{els[static_cast<std::size_t>(j)].m * els[static_cast<std::size_t>(i)].m,
                                  prod.parity};
      if (!(swapped == prod)) t.abelian = false;
    }
  }
  return t;
}

std::vector<RelationCheck> discrete_relations() {
  struct Rel {
    const char* lhs1;
    const char* lhs2;
    const char* rhs;
  };
  // The last two are tabulated alongside the others but contradict them:
  // with R = Q E and the quarter turns of order four, E R = T Q and
  // R Q = P E, not Q and E.
  const Rel rels[] = {
      {"P", "P", "0"}, {"T", "T", "0"}, {"C", "C", "0"}, {"P", "T", "C"},
      {"C", "P", "T"}, {"T", "C", "P"}, {"Q", "Q", "P"}, {"E", "E", "T"},
      {"R", "R", "C"}, {"Q", "E", "R"}, {"E", "R", "Q"}, {"R", "Q", "E"},
  };
  std::vector<RelationCheck> out;
  for (const auto& r : rels) {
    const Mat<4> lhs = discrete_element(r.lhs1).m * discrete_element(r.lhs2).m;
    const Mat<4> rhs = discrete_element(r.rhs).m;
    RelationCheck c;
    c.text = std::string(r.lhs1) + "*" + r.lhs2 + " = " + r.rhs;
    c.residual = max_abs_diff(lhs, rhs);
    c.holds = c.residual == 0.0;
    if (!c.holds) c.text += " [computed: " + label_of(lhs) + "]";
    out.push_back(c);
  }
  return out;
}

RateParams discrete_automorphism(const DiscreteElement& s, const RateParams& rates,
                                 const Constants& k) {
  const Mat<4> conj = s.m * xi_u11(rates, k) * transpose(s.m);
  return u11_extract(conj, k);
}

InvarianceReport discrete_invariance_check(const DiscreteElement& s) {
  InvarianceReport r;
  r.symplectic_residual = congruence_residual(zeta(), s.m);
  r.symmetric_residual = congruence_residual(eta(), s.m);
  r.invariant = r.symplectic_residual == 0.0 && r.symmetric_residual == 0.0;
  return r;
}

FrameVector discrete_frame_action(const DiscreteElement& s, const FrameVector& z) {
  return FrameVector::from_slots(s.m * z.slots());
}

}  // namespace reciproca
