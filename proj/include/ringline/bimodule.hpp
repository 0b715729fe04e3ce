// Matrix representations of a finite ring over a finite field: a left
// K-space U = K^m carrying a right R-action through a table of m x m
// matrices, the induced map from points of the projective line to
// half-dimensional subspaces of K^{2m}, and the certificates comparing that
// map across sub-, quotient-, and direct-sum constructions.
//
// Conventions: vectors are rows, matrices act on the right, so the table
// a -> rho_a is a genuine ring homomorphism (rho_{ab} = rho_a rho_b).  The
// double space U x U is coordinatized u-block first, then v-block.
#pragma once

#include "ringline/linalg.hpp"
#include "ringline/projline.hpp"
#include "ringline/ring.hpp"

namespace ringline {

struct Bimodule {
  Ring R;
  GfPtr K;
  int m = 0;
  std::vector<MatK> rho;  // ring code -> m x m matrix over K
};

// Validates shape, additivity, multiplicativity, and rho_1 = identity;
// throws with the first violating pair.
Bimodule make_bimodule(Ring R, GfPtr K, std::vector<MatK> rho);

// U = R as a left K-space over the carrier's distinguished subfield, with
// rho_a the matrix of right multiplication x -> x*a.  Always faithful.
// Rejects carriers without a distinguished subfield.
Bimodule regular_bimodule(const Ring& R);

struct AnnihilatorReport {
  Ideal annihilator;  // {a : rho_a = 0}
  bool faithful = false;  // the table is injective
};
AnnihilatorReport annihilator_and_faithful(const Bimodule& B);

// Row space of [alpha | beta]: the graph subspace {(u*alpha, u*beta)}.
Subspace psi_subspace(const MatK& alpha, const MatK& beta);

// Image of a point: the graph subspace of its canonical representative.
Subspace phi_point(const Bimodule& B, const Point& p);

struct ProjectiveModel {
  Bimodule bimodule;
  std::vector<Point> points;     // the full projective line, ascending
  std::vector<Subspace> images;  // phi_point per point
  AnnihilatorReport ann;
};
ProjectiveModel build_model(const Bimodule& B, long ceiling = 256);

// The model-level battery: representative independence of the images,
// half-dimensionality, distant pairs landing on complementary subspaces,
// injectivity of the point map matching faithfulness, and the
// non-complementarity biconditional — "all non-distant pairs map to
// non-complementary subspaces" observed directly versus the algebraic
// condition "rho_a invertible forces a to be a unit" — with agreement
// asserted between the two sides.  Rejects m = 0 models.
struct ModelCertificate {
  bool ok = false;  // conjunction of everything below

  bool well_defined = false;
  bool images_half_dimensional = false;
  bool distant_implies_complementary = false;
  bool phi_injective = false;
  bool injectivity_matches_faithfulness = false;
  bool nondistant_noncomplementary = false;   // observed over all pairs
  bool invertible_rho_implies_unit = false;   // scanned over all of R
  bool noncomplementarity_biconditional = false;  // the two lines above agree

  int witness_p = -1, witness_q = -1;  // offending pair of point indices
  int witness_a = -1;                  // non-unit with invertible rho_a
};
ModelCertificate verify_model(const ProjectiveModel& M);

// The faithful representation induced on R/ann(U): well-definedness of the
// coset table, faithfulness, containment and equality of the deduplicated
// image sets, and the observed surjectivity of the induced point map of the
// canonical projection, which must coincide with image-set equality.
struct FactorComparison {
  QuotientResult quotient;  // R/ann with projection and representatives
  Bimodule induced;         // coset -> rho of any representative
  bool induced_faithful = false;
  bool images_contained = false;  // base image set inside the factor image set
  bool images_equal = false;
  bool projection_line_surjective = false;
  bool equality_matches_surjectivity = false;
  bool ok = false;
};
FactorComparison factor_representation(const Bimodule& B, long ceiling = 256);

// The block matrix [[rho_a, rho_b], [rho_c, rho_d]] of an invertible gamma
// acts on K^{2m} and must transport every image: Phi(p*gamma) =
// Phi(p)*M(gamma).  Rejects singular gamma.
struct CollineationCertificate {
  MatK block_matrix;  // 2m x 2m
  bool block_invertible = false;
  bool equivariant = false;
  int witness_point = -1;
  bool ok = false;
};
CollineationCertificate collineation_check(const Bimodule& B, const Mat2& gamma,
                                           long ceiling = 256);

// A subspace of U that the whole action maps into itself.
struct SubBimoduleWitness {
  Subspace space;
  bool invariant = false;
  int violating_a = -1;  // action element moving the space out, when any
};
SubBimoduleWitness make_sub_witness(const Bimodule& B, const Subspace& candidate);

// Every action-invariant subspace of U, all dimensions, ascending; intended
// for small m where the subspace lattice is enumerable.
std::vector<Subspace> find_sub_bimodules(const Bimodule& B,
                                         unsigned long long ceiling = 100000);

// Restriction of the action to an invariant subspace, in coordinates given
// by the subspace's canonical basis.
Bimodule sub_bimodule(const Bimodule& B, const SubBimoduleWitness& W);
// Induced action on U/U' in quotient coordinates.
Bimodule quotient_bimodule(const Bimodule& B, const SubBimoduleWitness& W);

// Restriction comparison: embedded into K^{2m} through the doubled witness
// basis, the restricted image of every point equals the full image
// intersected with U' x U'.
struct SubModelCertificate {
  Bimodule restricted;
  Subspace doubled;  // U' x U' inside K^{2m}
  AnnihilatorReport restricted_ann;
  bool equality = false;
  int witness_point = -1;
  bool ok = false;
};
SubModelCertificate sub_bimodule_model(const Bimodule& B, const SubBimoduleWitness& W,
                                       long ceiling = 256);

// Decomposition comparison: for U = U' ⊕ U'', every full image is the
// direct sum of the two embedded restricted images.
struct DirectSumCertificate {
  bool valid_decomposition = false;  // complementary invariant parts
  bool equality = false;
  int witness_point = -1;
  bool ok = false;
};
DirectSumCertificate direct_sum_model(const Bimodule& B, const SubBimoduleWitness& W1,
                                      const SubBimoduleWitness& W2, long ceiling = 256);

// Quotient comparison: lifting every quotient-model image through the
// section and joining U' x U' recovers the full image plus U' x U'.  Also
// reports the action kernel {a : row space of rho_a inside U'}, which must
// agree with the annihilator of the quotient action.
struct QuotientModelCertificate {
  Bimodule quotient_action;
  std::vector<int> kernel;  // ascending
  bool kernel_matches = false;
  bool equality = false;
  int witness_point = -1;
  bool ok = false;
};
QuotientModelCertificate quotient_model(const Bimodule& B, const SubBimoduleWitness& W,
                                        long ceiling = 256);

}  // namespace ringline
