#pragma once

#include <string>
#include <vector>

#include "reciproca/constants.hpp"
#include "reciproca/hamilton.hpp"
#include "reciproca/mat.hpp"

namespace reciproca {

// The discrete automorphisms of the frame: parity P, time reversal T, their
// product C = -I, the quarter turns Q (position/momentum plane) and E
// (time/energy plane), the Born reciprocity map R = Q E = zeta, and the
// products of {P, T, C} with {Q, E, R}. Labels:
//   "0" "P" "T" "C" "Q" "E" "R" "PQ" "PE" "PR" "TQ" "TE" "TR" "CQ" "CE" "CR"
// Extended labels carry a trailing "+" or "-" for the sign of the two
// central slots of the 6x6 embedding ("0" alone means "0+").
std::vector<std::string> discrete_labels();

struct DiscreteElement {
  std::string label;
  Mat<4> m;
  int parity = +1;  // central-slot sign used by the 6x6 extension
};

// Raises UnknownLabel for anything outside the grammar above.
DiscreteElement discrete_element(const std::string& label);

// diag(m, parity, parity) on the frame + central slots.
Mat<6> discrete_element6(const DiscreteElement& e);

struct ClosureTable {
  bool extended = false;
  int order = 0;
  std::vector<std::string> labels;  // canonical label per generated element
  std::vector<Mat<4>> matrices;
  std::vector<int> parities;            // +-1 per element (extended only)
  bool closed = false;                  // every product lands in the set
  bool abelian = false;                 // every pair commutes exactly
  bool signed_permutations = false;     // one entry of +-1 per row and column
  bool inverses_are_transposes = false;
  std::vector<int> cayley;              // order*order: index of element i*j
  std::string cayley_text() const;
};

// Breadth-first closure of {P, T, Q, E} (plus the central sign flip when
// extended) under the matrix product, with exact integer comparisons.
ClosureTable discrete_table(bool extended);

struct RelationCheck {
  std::string text;
  bool holds = false;
  double residual = 0.0;
};

// Commonly tabulated product relations. Two of them contradict the rest of
// the table (no abelian group can satisfy all ten at once) and are reported
// as failing rather than silently corrected.
std::vector<RelationCheck> discrete_relations();

// Conjugation action on rate parameters: extracts (v', f', r', a') from
// s * xi_u11(rates) * s^T and verifies by rebuilding. Raises NotInGroup
// when the conjugate leaves the rate-boost family, which happens for the
// quarter-turn elements once the two scale constants differ.
RateParams discrete_automorphism(const DiscreteElement& s, const RateParams& rates,
                                 const Constants& k = {});

struct InvarianceReport {
  double symplectic_residual = 0.0;
  double symmetric_residual = 0.0;  // two-scale orthogonal metric
  bool invariant = false;
};

// Congruence residuals of the element against both invariant bilinear forms.
InvarianceReport discrete_invariance_check(const DiscreteElement& s);

// Frame action z -> s z.
FrameVector discrete_frame_action(const DiscreteElement& s, const FrameVector& z);

}  // namespace reciproca
