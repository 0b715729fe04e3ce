// Pairs, points, and the projective line over a finite ring: admissibility,
// the distant relation, the elementary/diagonal matrix groups, and the point
// maps induced by ring homomorphisms together with their property checks.
//
// Convention used everywhere: pairs are row vectors and matrices act on the
// right, so a point is the left module R(a,b) and group elements compose left
// to right.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ringline/ring.hpp"

namespace ringline {

struct Pair {
  int a = 0, b = 0;
  friend bool operator==(const Pair& x, const Pair& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Pair& x, const Pair& y) { return !(x == y); }
  friend bool operator<(const Pair& x, const Pair& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

// [[a, b], [c, d]], row-major.
struct Mat2 {
  int a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
};

Pair scale_pair(const Ring& R, int s, const Pair& p);           // s·(a,b)
Pair pair_times(const Ring& R, const Pair& p, const Mat2& m);   // (a,b)·M
Mat2 mat2_identity(const Ring& R);
Mat2 mat2_mul(const Ring& R, const Mat2& x, const Mat2& y);
Mat2 transvection_lower(const Ring& R, int x);  // [[1,0],[x,1]]
Mat2 transvection_upper(const Ring& R, int x);  // [[1,x],[0,1]]
std::string pair_text(const Ring& R, const Pair& p);
std::string mat2_text(const Ring& R, const Mat2& m);

// True iff ax + by = 1 is solvable; exhaustive scan over coefficient pairs.
bool is_unimodular(const Ring& R, const Pair& p);

// Fast mode decides by unimodularity (equivalent for the finite carriers this
// library materializes); oracle mode searches every completion (c,d) for an
// invertible stacked matrix and is ceiling-guarded since it costs |R|^2
// inversion scans per pair.  The two modes must agree wherever both run.
enum class AdmissibleMode { Fast, Oracle };
bool is_admissible(const Ring& R, const Pair& p, AdmissibleMode mode = AdmissibleMode::Fast,
                   long oracle_ceiling = 16);

// Invertibility of a 2x2 matrix, decided by injectivity of the row action
// x -> xM on the finite module R^2.  On success the inverse is assembled from
// the preimages of (1,0) and (0,1) and verified on both sides; on failure two
// distinct rows with the same image are reported.
struct Mat2Inverse {
  bool invertible = false;
  Mat2 inverse;               // set when invertible
  Pair collision_u, collision_v;  // set when singular: distinct, same image
};
Mat2Inverse mat2_invert(const Ring& R, const Mat2& m);
bool mat2_invertible(const Ring& R, const Mat2& m);

// For s with a right inverse r (s*r = 1): the invertible matrix
// [[s, 0], [1-rs, r]] whose inverse is [[r, 1-rs], [0, s]]; the closed-form
// inverse is verified on both sides before returning.
Mat2 gamma_matrix(const Ring& R, int s, int r);

// A point of the projective line, keyed by its canonical generator: the
// lexicographically least pair in the unit orbit {u·(a,b) : u a unit}.
struct Point {
  Pair rep;
  std::vector<Pair> orbit;  // unit multiples of rep, ascending
  friend bool operator==(const Point& x, const Point& y) { return x.rep == y.rep; }
  friend bool operator!=(const Point& x, const Point& y) { return !(x == y); }
  friend bool operator<(const Point& x, const Point& y) { return x.rep < y.rep; }
};

// Canonical form of an admissible pair; rejects inadmissible input.
Point point_canonicalize(const Ring& R, const Pair& p);

// The full cyclic module {r·(a,b) : r in R}, ascending and deduplicated.
std::vector<Pair> module_set(const Ring& R, const Pair& p);

// All points, ascending by canonical pair.  Enumerates admissible pairs and
// keeps each unit-orbit minimum; refuses carriers above the ceiling.
std::vector<Point> projective_line(const Ring& R, long ceiling = 256);

// Two points are distant when the matrix stacking their representatives is
// invertible; this does not depend on which admissible generators are used.
bool distant(const Ring& R, const Point& p, const Point& q);

struct DistantGraph {
  std::vector<Point> points;           // ascending
  std::vector<std::vector<char>> adj;  // symmetric; adj[i][i] only if 1 = 0
  std::vector<int> degree;
  bool anti_reflexive = true;
};
DistantGraph distant_graph(const Ring& R, long ceiling = 256, int threads = 1);

// Canonicalized image of p under an invertible matrix; rejects singular input.
Point apply_gl2(const Ring& R, const Point& p, const Mat2& g);

// All elementary transvections (the identity listed once).
std::vector<Mat2> e2_generators(const Ring& R);
// Pseudo-random product of transvections and invertible diagonal matrices.
Mat2 random_ge2_word(const Ring& R, std::mt19937& g, int min_len = 3, int max_len = 6);

// Orbit and subgroup survey: the transvection orbit of R(1,0) compared with
// the full point list, and — within the scan ceiling — the order of the full
// matrix group versus the subgroup generated by transvections and invertible
// diagonals.  Oversize group scans are skipped, never reported as failures.
struct Ge2Report {
  std::vector<Point> e2_orbit;           // ascending
  bool e2_orbit_equals_line = false;
  bool group_scans_ran = false;          // |R| within gl2_ceiling
  unsigned long long gl2_order = 0;      // exhaustive count (when scans ran)
  unsigned long long ge2_order = 0;      // closure size (when scans ran)
  bool ge2_ring = false;                 // the two orders agree (when scans ran)
};
Ge2Report ge2_analysis(const Ring& R, long gl2_ceiling = 16, long line_ceiling = 256);

// The point map p = R(a,b) -> S(a^phi, b^phi) of a ring homomorphism, with
// its certificate: distance preservation (exhaustive), equivariance
// p^(g·map) = p^(map·g^phi) over the transvection generators plus seeded
// pseudo-random words, and the equivalence "point map injective iff the
// homomorphism is injective".
struct InducedMap {
  RingHom phi;
  std::vector<Point> source_line, target_line;
  std::vector<int> image_index;  // source point index -> target point index

  bool distance_preserved = true;
  bool equivariant = true;
  bool line_map_injective = false;
  bool injectivity_matches = false;  // line_map_injective == phi.injective()

  int fail_p = -1, fail_q = -1;  // witnesses: point indices on failure
};
InducedMap induced_map(const RingHom& phi, long ceiling = 256, uint32_t seed = 1729,
                       int random_words = 100);

// Three equivalent formulations of "the point map reflects distance":
//   image distant implies distant (exhaustive pair scan),
//   unit pullback (y^phi a unit forces y a unit),
//   kernel inside the radical and image-subring units = ambient units in the
//   image.
// Each is evaluated independently; they must agree.
struct DistanceReflectionReport {
  bool image_distant_implies_distant = false;
  bool unit_pullback = false;
  bool radical_and_image_units = false;
  bool agree = false;
  bool verdict = false;  // the common value when they agree

  int witness_y = -1;               // unit pullback failure
  int witness_p = -1, witness_q = -1;  // pair scan failure (point indices)
  int witness_kernel = -1;          // kernel element outside the radical
  int witness_image_unit = -1;      // ambient unit in the image, not a subring unit
};
DistanceReflectionReport check_distance_reflection(const RingHom& phi, long ceiling = 256);

// For a surjective homomorphism: three sufficient conditions for the induced
// point map to be surjective (target generated by transvections and
// diagonals; kernel inside the radical; kernel split off by a central
// idempotent), each checked independently, plus the directly observed
// surjectivity of the point map.  Rejects non-surjective homomorphisms.
struct SurjectivityReport {
  bool ge2_scan_ran = false;
  bool target_ge2_ring = false;          // when the scan ran
  bool kernel_in_radical = false;
  bool kernel_is_split_ideal = false;    // central idempotent e with ker = eR
  int splitting_idempotent = -1;         // the witness e, when found
  bool line_map_surjective = false;      // observed directly
  bool conditions_imply_surjective = false;
};
SurjectivityReport check_surjectivity(const RingHom& phi, long gl2_ceiling = 16,
                                      long ceiling = 256);

}  // namespace ringline
