// Two exact-arithmetic demonstrations on infinite carriers.  Nothing infinite
// is enumerated: every claim is a closed-form identity executed exactly, or
// an exhaustive sweep over a bounded window whose bound is recorded.
//
// First: over the polynomial ring in one variable, the pair of points
// generated by (1,0) and (1,X) is non-distant (the stacked determinant X has
// no inverse among polynomials), yet inside the rational-function plane their
// images are complementary.  The same two generators, read as submodules of
// the free rank-two module, intersect trivially without spanning it.
//
// Second: along the inclusion of the integers into the rationals, the induced
// point map is injective — a bijection on every bounded-height window — while
// non-distant integer points such as (1,0) and (1,2) become distant rational
// points; reflection of distance fails precisely on the pairs whose
// determinant is a nonzero non-unit.
#pragma once

#include <cstdint>

#include "ringline/exact.hpp"

namespace ringline {

struct PolyDemoCertificate {
  int p = 0;
  int samples = 0;
  uint32_t seed = 0;

  bool points_unimodular = false;       // explicit witnesses solve ax + by = 1
  bool determinant_nonunit = false;     // stacked determinant X is no unit
  bool graph_matrix_invertible = false; // over fractions the stack inverts both ways
  bool splits_unique = false;           // every sampled pair decomposes uniquely
  bool intersection_trivial = false;    // the two images meet only in zero
  bool polynomial_span_fails = false;   // (0,1) unreachable with polynomial scalars
  bool rational_split_exists = false;   // ... though reachable with fractions
  bool ok = false;
};
PolyDemoCertificate poly_demo(int p, int samples = 100, uint32_t seed = 1729);

struct ZqDemoCertificate {
  long height = 0;
  size_t window_points = 0;           // canonical coprime pairs in the window

  bool injective = false;             // induced map is injective on the window
  bool surjective_on_window = false;  // every bounded fraction point is hit
  bool coprime_representatives = false;  // each hit has a coprime integer pair
  bool distance_preserved = false;       // distant integer points stay distant
  bool reflection_characterized = false; // failures are exactly |det| >= 2
  unsigned long long reflection_failures = 0;

  bool named_pair_nondistant = false;     // (1,0) vs (1,2): determinant 2
  bool named_pair_images_distant = false; // their fraction images differ
  bool unit_pullback_fails = false;       // 2 inverts among fractions only
  bool ok = false;
};
ZqDemoCertificate z_to_q_demo(long height = 10);

}  // namespace ringline
