#include "ringline/linalg.hpp"

#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace ringline;

namespace {

MatK random_matrix(const GfPtr& F, int rows, int cols, oracles::Rng& rng) {
  MatK m = MatK::zero(F, rows, cols);
  for (auto& x : m.e) x = uint8_t(rng.below(int(F->q())));
  return m;
}

MatK random_invertible(const GfPtr& F, int n, oracles::Rng& rng) {
  for (;;) {
    MatK m = random_matrix(F, n, n, rng);
    if (invertible(m)) return m;
  }
}

bool is_rref(const MatK& m) {
  int prev_pivot = -1;
  for (int i = 0; i < m.rows; ++i) {
    int pivot = -1;
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) {
        pivot = j;
        break;
      }
    if (pivot < 0 || pivot <= prev_pivot) return false;  // zero row or order
    if (m.at(i, pivot) != 1) return false;
    for (int t = 0; t < m.rows; ++t)
      if (t != i && m.at(t, pivot) != 0) return false;
    prev_pivot = pivot;
  }
  return true;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
  GfPtr F = make_gf_order(3);
  MatK a = MatK::from_rows(F, {{1, 2}, {0, 1}});
  MatK b = MatK::from_rows(F, {{2, 0}, {1, 1}});
  CHECK(mat_add(a, b) == MatK::from_rows(F, {{0, 2}, {1, 2}}));
  CHECK(mat_mul(a, b) == MatK::from_rows(F, {{1, 2}, {1, 1}}));
  CHECK(mat_mul(a, MatK::identity(F, 2)) == a);
  CHECK(row_mat({1, 1}, a) == Row{1, 0});
  CHECK(mat_hcat(a, b) == MatK::from_rows(F, {{1, 2, 2, 0}, {0, 1, 1, 1}}));
  CHECK(mat_vcat(a, b) == MatK::from_rows(F, {{1, 2}, {0, 1}, {2, 0}, {1, 1}}));
  MatK blk = mat_block2(a, b, b, a);
  CHECK(blk.rows == 4);
  CHECK(blk.cols == 4);
  CHECK(blk.at(0, 2) == 2);
  CHECK(blk.at(2, 0) == 2);
  CHECK(blk.at(3, 3) == 1);
  CHECK_THROWS(mat_mul(a, MatK::identity(F, 3)));
  CHECK_THROWS(mat_add(a, MatK::identity(F, 3)));
}

TEST_CASE("rref is canonical and idempotent") {
  oracles::Rng rng(1729);
  for (long q : {2L, 3L, 4L, 5L}) {
    GfPtr F = make_gf_order(q);
    for (int trial = 0; trial < 40; ++trial) {
      MatK m = random_matrix(F, 3 + int(rng.below(3)), 3 + int(rng.below(3)), rng);
      MatK r = rref(m);
      CHECK(is_rref(r));
      CHECK(rref(r) == r);
      // row space is unchanged: every original row reduces to zero against r
      Subspace s = Subspace::span(r);
      for (int i = 0; i < m.rows; ++i) CHECK(s.contains(m.row(i)));
      CHECK(r.rows == rank(m));
    }
  }
}

TEST_CASE("span is independent of the generating set") {
  oracles::Rng rng(1729);
  GfPtr F = make_gf_order(3);
  for (int trial = 0; trial < 25; ++trial) {
    MatK m = random_matrix(F, 3, 5, rng);
    MatK t = random_invertible(F, 3, rng);
    CHECK(Subspace::span(m) == Subspace::span(mat_mul(t, m)));
  }
  // redundant generators collapse
  CHECK(Subspace::span(F, 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 1, 0}}) ==
        Subspace::span(F, 3, {{1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("matrix inverse round trips") {
  oracles::Rng rng(1729);
  for (long q : {2L, 3L, 4L}) {
    GfPtr F = make_gf_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      MatK m = random_invertible(F, 3, rng);
      auto inv = mat_inverse(m);
      REQUIRE(inv.has_value());
      CHECK(mat_mul(m, *inv) == MatK::identity(F, 3));
      CHECK(mat_mul(*inv, m) == MatK::identity(F, 3));
    }
  }
  GfPtr F2 = make_gf_order(2);
  MatK singular = MatK::from_rows(F2, {{1, 1}, {1, 1}});
  CHECK(rank(singular) == 1);
  CHECK_FALSE(invertible(singular));
  CHECK_FALSE(mat_inverse(singular).has_value());
  CHECK_FALSE(mat_inverse(MatK::zero(F2, 2, 3)).has_value());
}

TEST_CASE("subspace membership and element enumeration") {
  GfPtr F = make_gf_order(2);
  Subspace w = Subspace::span(F, 4, {{1, 0, 1, 0}, {0, 1, 1, 1}});
  CHECK(w.dim() == 2);
  CHECK(w.ambient() == 4);
  CHECK(w.contains(Row{1, 1, 0, 1}));
  CHECK_FALSE(w.contains(Row{1, 0, 0, 0}));
  CHECK(w.contains(Subspace::span(F, 4, {{1, 1, 0, 1}})));
  CHECK_FALSE(w.contains(Subspace::full_space(F, 4)));
  CHECK(Subspace::full_space(F, 4).contains(w));
  CHECK(Subspace::zero_space(F, 4).dim() == 0);
  CHECK(w.contains(Subspace::zero_space(F, 4)));

  auto elems = w.elements();
  CHECK(elems.size() == 4);  // 2^2 member vectors
  std::set<Row> uniq(elems.begin(), elems.end());
  CHECK(uniq.size() == 4);
  for (const Row& v : uniq) CHECK(w.contains(v));

  // 3 one-dimensional subspaces inside a 2-dim space over GF(2)
  auto pts = w.projective_points();
  CHECK(pts.size() == 3);
  CHECK(std::is_sorted(pts.begin(), pts.end()));

  GfPtr F3 = make_gf_order(3);
  Subspace w3 = Subspace::span(F3, 3, {{1, 0, 2}, {0, 1, 1}});
  CHECK(w3.elements().size() == 9);
  CHECK(w3.projective_points().size() == 4);  // (9-1)/(3-1)
  auto full_pts = Subspace::full_space(F3, 3).projective_points();
  CHECK(full_pts.size() == 13);  // (27-1)/2
  for (const Row& v : full_pts) {
    size_t lead = 0;
    while (v[lead] == 0) ++lead;
    CHECK(v[lead] == 1);
  }
}

TEST_CASE("sum and intersection satisfy the lattice laws") {
  oracles::Rng rng(1729);
  for (long q : {2L, 3L}) {
    GfPtr F = make_gf_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      Subspace a = Subspace::span(random_matrix(F, 1 + int(rng.below(3)), 4, rng));
      Subspace b = Subspace::span(random_matrix(F, 1 + int(rng.below(3)), 4, rng));
      SumIntersection si = sum_and_intersection(a, b);
      SumIntersection si_flip = sum_and_intersection(b, a);
      CHECK(si.sum == si_flip.sum);
      CHECK(si.intersection == si_flip.intersection);
      CHECK(si.sum.dim() + si.intersection.dim() == a.dim() + b.dim());
      CHECK(si.sum.contains(a));
      CHECK(si.sum.contains(b));
      CHECK(a.contains(si.intersection));
      CHECK(b.contains(si.intersection));
      // every common vector lies in the computed intersection
      for (const Row& v : a.elements())
        if (b.contains(v)) CHECK(si.intersection.contains(v));
    }
  }
}

TEST_CASE("complementary subspaces") {
  GfPtr F = make_gf_order(2);
  Subspace a = Subspace::span(F, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(is_complementary(a, Subspace::span(F, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}})));
  CHECK(is_complementary(a, Subspace::span(F, 4, {{0, 1, 1, 0}, {0, 0, 0, 1}})));
  // shared line
  CHECK_FALSE(is_complementary(a, Subspace::span(F, 4, {{0, 1, 0, 0}, {0, 0, 0, 1}})));
  // dimensions too small to span
  CHECK_FALSE(is_complementary(a, Subspace::span(F, 4, {{0, 0, 1, 1}})));
  CHECK(is_half_dimensional(a));
  CHECK_FALSE(is_half_dimensional(Subspace::span(F, 4, {{0, 0, 1, 1}})));
  CHECK_FALSE(is_half_dimensional(Subspace::full_space(F, 3)));
}

TEST_CASE("subspace counts match the independent recurrence") {
  CHECK(subspace_count(4, 2, 2) == 35);
  CHECK(subspace_count(6, 3, 2) == 1395);
  CHECK(subspace_count(4, 2, 3) == 130);
  CHECK(subspace_count(4, 2, 4) == 357);
  for (int d = 0; d <= 6; ++d)
    for (int r = 0; r <= d; ++r)
      for (long q : {2L, 3L, 4L, 5L})
        CHECK(subspace_count(d, r, q) == oracles::gaussian_binomial(d, r, q));
  CHECK(subspace_count(4, 5, 2) == 0);
  CHECK(subspace_count(3, 1, 5) == 31);  // (5^3 - 1)/(5 - 1)
}

TEST_CASE("subspace stream visits every subspace exactly once") {
  struct Case {
    int d, r;
    long q;
    unsigned long long expect;
  };
  for (Case c : {Case{4, 2, 2, 35}, Case{6, 3, 2, 1395}, Case{4, 2, 3, 130},
                 Case{3, 1, 4, 21}, Case{4, 0, 2, 1}, Case{4, 4, 2, 1}}) {
    GfPtr F = make_gf_order(c.q);
    SubspaceStream s(F, c.d, c.r);
    CHECK(s.total() == c.expect);
    std::set<Subspace> seen;
    while (auto w = s.next()) {
      CHECK(w->dim() == c.r);
      CHECK(w->ambient() == c.d);
      CHECK(is_rref(w->basis()));
      seen.insert(*w);
    }
    CHECK(seen.size() == c.expect);
    CHECK(s.position() == c.expect);
  }
  CHECK_THROWS(SubspaceStream(make_gf_order(2), 20, 10, 1000000));
  CHECK(all_subspaces(make_gf_order(2), 3, 1).size() == 7);
}

TEST_CASE("subspace stream seek replays the same order") {
  GfPtr F = make_gf_order(3);
  SubspaceStream s(F, 4, 2);
  std::vector<Subspace> all;
  while (auto w = s.next()) all.push_back(*w);
  REQUIRE(all.size() == 130);
  SubspaceStream t(F, 4, 2);
  t.seek(57);
  CHECK(t.position() == 57);
  for (size_t i = 57; i < all.size(); ++i) {
    auto w = t.next();
    REQUIRE(w.has_value());
    CHECK(*w == all[i]);
  }
  CHECK_FALSE(t.next().has_value());
  t.seek(0);
  auto first = t.next();
  REQUIRE(first.has_value());
  CHECK(*first == all[0]);
}

TEST_CASE("apply_matrix transports subspaces") {
  oracles::Rng rng(1729);
  GfPtr F = make_gf_order(3);
  for (int trial = 0; trial < 20; ++trial) {
    Subspace w = Subspace::span(random_matrix(F, 2, 4, rng));
    MatK m = random_invertible(F, 4, rng);
    Subspace image = apply_matrix(w, m);
    CHECK(image.dim() == w.dim());
    CHECK(apply_matrix(image, *mat_inverse(m)) == w);
    for (const Row& v : w.elements()) CHECK(image.contains(row_mat(v, m)));
  }
  // a non-invertible map can collapse dimension
  MatK proj = MatK::from_rows(F, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  Subspace w = Subspace::span(F, 4, {{0, 0, 1, 0}, {1, 0, 0, 1}});
  CHECK(apply_matrix(w, proj).dim() == 1);
}

TEST_CASE("quotient coordinates kill exactly the kernel") {
  for (long q : {2L, 3L}) {
    GfPtr F = make_gf_order(q);
    SubspaceStream s(F, 4, 2);
    while (auto w = s.next()) {
      QuotientMap qm = quotient_space(*w);
      CHECK(qm.qdim == 2);
      CHECK(qm.kernel == *w);
      for (const Row& v : Subspace::full_space(F, 4).elements()) {
        Row image = qm.apply(v);
        bool zero = std::all_of(image.begin(), image.end(),
                                [](uint8_t x) { return x == 0; });
        CHECK(zero == w->contains(v));
      }
      // lift is a right inverse of apply
      for (const Row& c : Subspace::full_space(F, 2).elements())
        CHECK(qm.apply(qm.lift(c)) == c);
    }
  }
  // degenerate ends: quotient by zero is the identity, by everything is a point
  GfPtr F = make_gf_order(2);
  QuotientMap by_zero = quotient_space(Subspace::zero_space(F, 3));
  CHECK(by_zero.qdim == 3);
  CHECK(by_zero.apply(Row{1, 0, 1}) == Row{1, 0, 1});
  QuotientMap by_all = quotient_space(Subspace::full_space(F, 3));
  CHECK(by_all.qdim == 0);
  CHECK(by_all.apply(Row{1, 0, 1}).empty());
}

TEST_CASE("quotient map preserves the lattice above the kernel") {
  GfPtr F = make_gf_order(2);
  Subspace w = Subspace::span(F, 4, {{1, 0, 1, 1}});
  QuotientMap qm = quotient_space(w);
  REQUIRE(qm.qdim == 3);
  // subspaces of the ambient space containing w correspond one-to-one to
  // subspaces of the quotient, preserving dimension shift and containment
  for (int r = 1; r <= 4; ++r) {
    std::map<Subspace, Subspace> image_of;
    SubspaceStream s(F, 4, r);
    while (auto u = s.next()) {
      if (!u->contains(w)) continue;
      std::vector<Row> rows;
      for (int i = 0; i < u->basis().rows; ++i) rows.push_back(qm.apply(u->basis().row(i)));
      Subspace img = Subspace::span(F, qm.qdim, rows);
      CHECK(img.dim() == r - 1);
      image_of.emplace(*u, img);
    }
    CHECK(image_of.size() == subspace_count(3, r - 1, 2));
    std::set<Subspace> images;
    for (const auto& kv : image_of) images.insert(kv.second);
    CHECK(images.size() == image_of.size());  // injective on the interval
    for (const auto& kv1 : image_of)
      for (const auto& kv2 : image_of)
        if (kv1.first.contains(kv2.first)) CHECK(kv1.second.contains(kv2.second));
  }
}
