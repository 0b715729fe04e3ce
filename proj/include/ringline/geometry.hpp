// Six families of classical line/plane geometries realized as projective
// models of small rings: scalar pairs giving reguli, twisted conjugate pairs
// giving Baer spreads, product rings giving transversal (hyperbolic)
// congruences, dual numbers giving parabolic congruences, triangular
// matrices giving special linear complexes, and two-nilpotent rings giving
// plane families on a regulus in 5-space.  Every geometric classification is
// certified by exhaustive enumeration in the ambient projective space.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ringline/bimodule.hpp"

namespace ringline {

enum class ExampleKind {
  Regulus51,            // K acting on K^2 by scalars
  TwistedConjugate52,   // GF(q^2) acting on K^2 through (id, Frobenius power)
  ProductHyperbolic53,  // K x ... x K acting on itself
  DualParabolic54,      // dual numbers (optionally twisted) acting on themselves
  Triangular55,         // upper triangular 2x2 matrices acting on rows K^2
  EpsDelta56            // K[eps,delta] with eps^2 = delta^2 = eps*delta = 0
};

std::string example_name(ExampleKind which);

struct ExampleSpec {
  ExampleKind which = ExampleKind::Regulus51;
  int q = 2;      // order of the acting field (for 52: the square order)
  int alpha = 0;  // Frobenius power of the twist (52, 54); 0 = identity
  int n = 2;      // number of factors (53 only)
};

// Equal-dimensional subspaces of one ambient space, sorted and deduplicated.
struct LineFamily {
  GfPtr K;
  int ambient = 0;
  int member_dim = 0;
  std::vector<Subspace> members;
};
LineFamily make_family(GfPtr K, int ambient, std::vector<Subspace> members);

struct GeometryModel {
  ExampleSpec spec;
  Ring R;
  Bimodule bimodule;
  ProjectiveModel model;
  ModelCertificate certificate;  // verified at construction
  LineFamily family;             // the deduplicated image set
  std::vector<Subspace> axes;    // distinguished doubled subspaces U_i x U_i
  SubBimoduleWitness witness;    // the distinguished invariant subspace
};

// Constructs the carrier, the action, the verified model, the image family,
// and the distinguished axes for one example.  Throws when the model
// certificate fails or the spec is inconsistent.
GeometryModel build_example(const ExampleSpec& spec, long ceiling = 4096);

// Deduplicated images of the action restricted to an invariant subspace, in
// the subspace's own coordinates.
LineFamily induced_family(const Bimodule& B, const SubBimoduleWitness& W,
                          long ceiling = 4096);

// Exactly q+1 pairwise skew lines of PG(3,q) such that every line meeting
// three of them meets all of them, certified by scanning every line of the
// space.  Rejects families that are not lines in PG(3,q).
bool is_regulus(const LineFamily& F);

struct SpreadReport {
  bool is_spread = false;   // members partition the points of PG(3,q)
  bool is_regular = false;  // the regulus through any three members stays inside
  int witness_i = -1, witness_j = -1, witness_k = -1;
  std::string label;  // classical name, set only when both checks pass
};
SpreadReport spread_checks(const LineFamily& F);

// Intersections of the model's lines with the fixed subgeometry of the
// coordinate-wise conjugation x -> x^(sqrt q), rewritten over the subfield.
// Requires the twist to be that conjugation.
LineFamily baer_trace(const GeometryModel& M);

struct CongruenceCertificate {
  unsigned long long candidates = 0;  // half-dimensional subspaces scanned
  size_t model_count = 0;
  size_t family_count = 0;
  bool equal = false;
  std::vector<Subspace> only_model, only_family;  // truncated witnesses
  std::string label;  // classical name, set only when the equality holds
};
// Two-sided comparison of the model against its geometric characterization:
// 53 transversal subspaces, 54 lines through an axis point inside its beta
// plane, 55 lines meeting the axis in one point, 56 planes meeting the axis
// 3-space in a regulus element inside its beta hyperplane.
CongruenceCertificate congruence_equalities(const GeometryModel& M,
                                            unsigned long long ceiling = 2000000);

struct BetaReport {
  Subspace axis;
  std::vector<std::pair<Subspace, Subspace>> map;  // common trace -> common join
  size_t class_count = 0;
  bool bijection = false;
  bool formula_matches = false;  // 54: matches the twisted coordinate formula
  bool containment = false;      // every member lies inside the join of its trace
  bool ok = false;
};
// The correspondence induced by the non-distant classes: members of one
// class share their trace on the axis and their join with it (54, 56).
BetaReport beta_map(const GeometryModel& M);

struct NondistantReport {
  bool equivalence = false;
  std::vector<std::vector<int>> classes;   // point indices, when an equivalence
  int bad_p = -1, bad_q = -1, bad_r = -1;  // violating triple otherwise
};
// Tests whether non-distance is an equivalence relation on the line.
NondistantReport nondistant_classes(const Ring& R, long ceiling = 256);

}  // namespace ringline
