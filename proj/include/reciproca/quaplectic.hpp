#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reciproca/algebra.hpp"
#include "reciproca/constants.hpp"
#include "reciproca/mat.hpp"

namespace reciproca {

// ----- flat translations of the frame (5x5 affine embedding) -----

Mat<5> translation_element(const FrameVector& z);

struct TranslationGenerators {
  Mat<5> T, Q, P, E;
};

TranslationGenerators translation_generators();

// ----- inhomogeneous group: boost times translation -----

struct InhomElement {
  Mat<4> k = Mat<4>::identity();
  FrameVector z;
};

// Affine element [[K, K z], [0, 1]], i.e. the boost applied after the
// translation. The product law follows from the matrix product:
//   compose(first, second) = (K2 K1, z1 + K1^(-1) z2).
Mat<5> inhom_element(const Mat<4>& k, const FrameVector& z);
InhomElement inhom_compose(const InhomElement& first, const InhomElement& second);
InhomElement inhom_inverse(const InhomElement& e);

// Dimensionless generator embeddings {K, N, M, U, T, Q, P, E}; the
// translations form an abelian ideal here (no central charge in 5x5).
std::vector<Mat<5>> inhom_generators();
StructureTable inhom_algebra_table();

// Signature quadratic form of a frame: -dt^2 + dq^2/c^2 ... in the two-scale
// normalization; invariant under the homogeneous action.
double translation_casimir(const FrameVector& z, const Constants& k = {});

// ----- central extension of the translations (6x6) -----

struct HeisenbergElement {
  FrameVector z;
  double iota = 0.0;
};

// [[I, 0, z], [z^T zeta, 1, 2 iota], [0, 0, 1]]. The composition picks up
// the symplectic area cocycle: iota'' = iota2 + iota1 + (z2^T zeta z1)/2.
Mat<6> heisenberg_element(const FrameVector& z, double iota);
HeisenbergElement heisenberg_compose(const HeisenbergElement& first,
                                     const HeisenbergElement& second);
HeisenbergElement heisenberg_inverse(const HeisenbergElement& e);

struct HeisenbergGenerators {
  Mat<6> T, Q, P, E, I;
};

HeisenbergGenerators heisenberg_generators();

// Algebra element t T + q Q + p P + e E + iota I.
Mat<6> heisenberg_algebra_element(const FrameVector& z, double iota);
StructureTable heisenberg_algebra_table();

// diag(1,1,1,1, e^eps, e^-eps). Conjugation scales z by e^eps and iota by
// e^(2 eps); dilation_apply reproduces the conjugated matrix bit-for-bit.
Mat<6> dilation(double epsilon);
HeisenbergElement dilation_apply(double epsilon, const HeisenbergElement& e);

// Max-norm residual of k^T zeta k - zeta.
double symplectic_check(const Mat<4>& k);

// ----- full group: discrete x dilation x boost x central translation -----

struct QuaplecticElement {
  Mat<4> xi = Mat<4>::identity();
  FrameVector z;
  double iota = 0.0;
  double epsilon = 0.0;
  Mat<4> varsigma = Mat<4>::identity();
  double varsigma_parity = 1.0;  // sign on the two central slots
};

// varsigma6 * dilation(epsilon) * embed(xi) * heisenberg_element(z, iota).
// Raises NotSymplectic when xi (or varsigma) does not preserve zeta.
Mat<6> quaplectic_element(const QuaplecticElement& e, const Tolerance& tol = {});

struct QuaplecticParts {
  Mat<4> xi;
  FrameVector z;
  double iota;
};

// Pattern extraction for elements with epsilon = 0 and trivial discrete
// factor; verifies every structural zero and the fifth-row pairing and
// raises NotInGroup on mismatch.
QuaplecticParts quaplectic_extract(const Mat<6>& m, const Tolerance& tol = {});

// Dimensionless generators {K, N, M, U, T, Q, P, E, I} in the 6x6
// representation and their recomputed structure table.
std::vector<Mat<6>> quaplectic_generators();
StructureTable quaplectic_algebra_table();

// ----- quadratic Casimir certification -----

struct CasimirCoefficients {
  int sT = 0, sQ = 0, sP = 0, sE = 0, mu = 0;
};

// Certifies sign choices in C = (sT T^2 + sQ Q^2 + sP P^2 + sE E^2)/2 + mu I U
// by symbolic normal-ordered commutation against all nine generators, over
// the exact integer structure constants. The 6x6 evaluation of any such
// candidate collapses to the zero matrix, so matrix arithmetic alone cannot
// distinguish the sign choices; the symbolic computation can.
struct CasimirReport {
  bool certified = false;
  CasimirCoefficients coeffs;
  std::vector<CasimirCoefficients> all_certified;
  long long max_commutator_coeff = 0;
  Mat<6> matrix_value;
  std::vector<std::string> reference_diff;
};

CasimirReport casimir_c2();

// ----- cocycle consistency of the contracted group law -----

struct CocycleCheck {
  bool passed = false;
  double max_residual = 0.0;
  double negative_control_residual = 0.0;  // deviation of a mutated law
  bool negative_control_failed = false;    // true when the mutation is detected
  int cases = 0;
};

// Checks that the third slot of the nilpotent rate composition is the
// central area cocycle of the one-dimensional centrally extended
// translations (iota = r/2), against actual 4x4 matrix products. The
// negative control flips one sign in the cocycle and must be detected.
CocycleCheck contraction_check_h1(std::uint64_t seed, int cases);

// ----- tabulated reference structure constants -----

// Commonly tabulated bracket values for diff reports. Valid names:
// "hamilton", "su11", "contracted", "inhom", "quaplectic", "heisenberg".
std::vector<ReferenceBracket> reference_brackets(const std::string& which);

}  // namespace reciproca
