#include "ringline/bimodule.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "ringline/spec_parse.hpp"

using namespace ringline;

namespace {

Ring mat(const std::string& text) { return materialize(parse_ring_spec(text)); }

// carrier codes whose subfield coordinate rows lie in the given subspace
std::vector<int> coord_members(const Ring& R, const Subspace& W) {
  const auto& ks = *R.k_structure();
  std::vector<int> out;
  for (int a = 0; a < R.size(); ++a)
    if (W.contains(ks.coords[a])) out.push_back(a);
  return out;
}

// closure under addition and right multiplication, checked with ring
// operations alone — no matrices involved
bool closed_under_ring_action(const Ring& R, const std::vector<int>& members) {
  std::set<int> s(members.begin(), members.end());
  for (int m : members) {
    for (int m2 : members)
      if (!s.count(R.add(m, m2))) return false;
    for (int r = 0; r < R.size(); ++r)
      if (!s.count(R.mul(m, r))) return false;
  }
  return true;
}

int point_index(const std::vector<Point>& line, const Ring& R, int a, int b) {
  Point p = point_canonicalize(R, Pair{a, b});
  for (size_t i = 0; i < line.size(); ++i)
    if (line[i] == p) return int(i);
  return -1;
}

template <class F>
std::string thrown_message(F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

bool mentions(const std::string& msg, const std::string& needle) {
  return msg.find(needle) != std::string::npos;
}

// table sending each carrier element to a fixed scalar multiple of the
// identity — additive and unital, generally not multiplicative-correct
std::vector<MatK> scalar_table(const Ring& R, GfPtr K, int m) {
  std::vector<MatK> t;
  for (int a = 0; a < R.size(); ++a) {
    MatK s = MatK::zero(K, m, m);
    for (int i = 0; i < m; ++i) s.at(i, i) = uint8_t(a % K->q());
    t.push_back(s);
  }
  return t;
}

// mod-p reduction table: 1x1 matrices over GF(p)
std::vector<MatK> mod_table(const Ring& R, GfPtr K) {
  std::vector<MatK> t;
  for (int a = 0; a < R.size(); ++a)
    t.push_back(MatK::from_rows(K, {{uint8_t(a % K->q())}}, 1));
  return t;
}

}  // namespace

TEST_CASE("representation tables validate ring laws") {
  GfPtr F2 = make_gf_order(2);
  GfPtr F3 = make_gf_order(3);
  Ring Z4 = mat("Z/4");

  // the mod-2 reduction of Z/4 is a legitimate table
  Bimodule B = make_bimodule(Z4, F2, mod_table(Z4, F2));
  CHECK(B.m == 1);
  CHECK(B.rho[3] == MatK::identity(F2, 1));

  // table length must match the carrier
  CHECK(mentions(thrown_message([&] { make_bimodule(Z4, F2, {}); }), "entries"));

  // all entries must share one square shape
  {
    auto t = mod_table(Z4, F2);
    t[2] = MatK::zero(F2, 1, 2);
    CHECK(mentions(thrown_message([&] { make_bimodule(Z4, F2, t); }), "1x1"));
  }

  // entry bytes must be field values
  {
    auto t = mod_table(Z4, F2);
    t[2].e[0] = 2;
    CHECK(mentions(thrown_message([&] { make_bimodule(Z4, F2, t); }), "outside the field"));
  }

  // the identity must act as the identity matrix
  {
    std::vector<MatK> t(4, MatK::zero(F2, 1, 1));
    CHECK(mentions(thrown_message([&] { make_bimodule(Z4, F2, t); }), "identity"));
  }

  // additive failure: reducing Z/4 mod 3 is not an additive map
  CHECK(mentions(thrown_message([&] { make_bimodule(Z4, F3, scalar_table(Z4, F3, 1)); }),
                 "additivity"));

  // multiplicative failure: composing the regular table of a matrix ring
  // with transposition keeps additivity but reverses products
  {
    Ring M2 = mat("M2(GF(2))");
    Bimodule reg = regular_bimodule(M2);
    const auto& ks = *M2.k_structure();
    std::vector<MatK> twisted(16, MatK{});
    for (int a = 0; a < 16; ++a) {
      Row c = ks.coords[a];
      Row t = {c[0], c[2], c[1], c[3]};  // transpose in row-major coordinates
      for (int b = 0; b < 16; ++b)
        if (ks.coords[b] == t) twisted[a] = reg.rho[b];
    }
    CHECK(mentions(thrown_message([&] { make_bimodule(M2, reg.K, twisted); }),
                   "multiplicativity"));
  }
}

TEST_CASE("regular tables require subfield coordinates") {
  CHECK(mentions(thrown_message([] { return regular_bimodule(mat("Z/4")); }),
                 "distinguished subfield"));
  CHECK(mentions(thrown_message([] { return regular_bimodule(mat("Z/6")); }),
                 "distinguished subfield"));
  CHECK(mentions(thrown_message([] { return regular_bimodule(mat("Z/2xZ/3")); }),
                 "distinguished subfield"));
  CHECK(mentions(thrown_message([] { return regular_bimodule(mat("Z/1")); }),
                 "distinguished subfield"));

  CHECK(regular_bimodule(mat("GF(4)")).m == 1);
  CHECK(regular_bimodule(mat("GF(2)")).m == 1);
  CHECK(regular_bimodule(mat("EpsDelta(GF(2))")).m == 3);
  CHECK(regular_bimodule(mat("UT2(GF(2))")).m == 3);
  CHECK(regular_bimodule(mat("M2(GF(2))")).m == 4);

  // dual numbers act by [[u, v], [0, u]]
  Ring D = mat("Dual(GF(2))");
  Bimodule B = regular_bimodule(D);
  REQUIRE(B.m == 2);
  const auto& ks = *D.k_structure();
  for (int a = 0; a < D.size(); ++a) {
    uint8_t u = ks.coords[a][0], v = ks.coords[a][1];
    CHECK(B.rho[a] == MatK::from_rows(B.K, {{u, v}, {0, u}}, 2));
  }
}

TEST_CASE("annihilators and faithfulness") {
  for (const char* text :
       {"GF(4)", "Dual(GF(2))", "UT2(GF(2))", "M2(GF(2))", "EpsDelta(GF(2))"}) {
    CAPTURE(text);
    Bimodule B = regular_bimodule(mat(text));
    AnnihilatorReport rep = annihilator_and_faithful(B);
    CHECK(rep.faithful);
    CHECK(rep.annihilator.members == std::vector<int>{0});
  }

  Ring Z4 = mat("Z/4");
  AnnihilatorReport m2 = annihilator_and_faithful(
      make_bimodule(Z4, make_gf_order(2), mod_table(Z4, make_gf_order(2))));
  CHECK_FALSE(m2.faithful);
  CHECK(m2.annihilator.members == std::vector<int>{0, 2});
  CHECK(is_two_sided_ideal(Z4, m2.annihilator.members));

  Ring Z6 = mat("Z/6");
  AnnihilatorReport m3 = annihilator_and_faithful(
      make_bimodule(Z6, make_gf_order(3), mod_table(Z6, make_gf_order(3))));
  CHECK_FALSE(m3.faithful);
  CHECK(m3.annihilator.members == std::vector<int>{0, 3});
  CHECK(is_two_sided_ideal(Z6, m3.annihilator.members));
}

TEST_CASE("graph subspaces of representation pairs") {
  GfPtr F2 = make_gf_order(2);
  MatK I = MatK::identity(F2, 2);
  MatK Z = MatK::zero(F2, 2, 2);
  MatK A = MatK::from_rows(F2, {{1, 1}, {0, 1}}, 2);

  CHECK(psi_subspace(I, Z) == Subspace::span(F2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(psi_subspace(Z, I) == Subspace::span(F2, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));

  // graph of A: rows (e_i | row_i(A))
  Subspace G = psi_subspace(I, A);
  CHECK(G.dim() == 2);
  CHECK(G.contains(Row{1, 0, 1, 1}));
  CHECK(G.contains(Row{0, 1, 0, 1}));

  // scaled generating pairs span the same subspace
  CHECK(psi_subspace(A, mat_mul(A, A)) == psi_subspace(I, A));
}

TEST_CASE("point images for dual numbers match hand computation") {
  Ring D = mat("Dual(GF(2))");
  Bimodule B = regular_bimodule(D);
  std::vector<Point> line = projective_line(D);
  REQUIRE(line.size() == 6);
  int eps = D.k_structure()->basis[1];

  Subspace im10 = phi_point(B, line[size_t(point_index(line, D, 1, 0))]);
  CHECK(im10 == Subspace::span(B.K, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));

  Subspace im_eps1 = phi_point(B, line[size_t(point_index(line, D, eps, 1))]);
  CHECK(im_eps1 == Subspace::span(B.K, 4, {{0, 1, 1, 0}, {0, 0, 0, 1}}));

  // distant pair -> complementary images
  CHECK(distant(D, line[size_t(point_index(line, D, 1, 0))],
                line[size_t(point_index(line, D, eps, 1))]));
  CHECK(is_complementary(im10, im_eps1));

  // non-distant pair -> overlapping images
  Subspace im1eps = phi_point(B, line[size_t(point_index(line, D, 1, eps))]);
  CHECK_FALSE(distant(D, line[size_t(point_index(line, D, 1, 0))],
                      line[size_t(point_index(line, D, 1, eps))]));
  CHECK_FALSE(is_complementary(im10, im1eps));
  CHECK(sum_and_intersection(im10, im1eps).intersection.dim() == 1);
}

TEST_CASE("model certificates for faithful regular actions") {
  for (const char* text :
       {"GF(2)", "GF(4)", "Dual(GF(2))", "UT2(GF(2))", "EpsDelta(GF(2))", "M2(GF(2))"}) {
    CAPTURE(text);
    Ring R = mat(text);
    ProjectiveModel M = build_model(regular_bimodule(R));
    ModelCertificate cert = verify_model(M);
    CHECK(cert.ok);
    CHECK(cert.well_defined);
    CHECK(cert.images_half_dimensional);
    CHECK(cert.distant_implies_complementary);
    CHECK(cert.phi_injective);
    CHECK(cert.injectivity_matches_faithfulness);
    CHECK(cert.nondistant_noncomplementary);
    CHECK(cert.invertible_rho_implies_unit);
    CHECK(cert.noncomplementarity_biconditional);
    CHECK(cert.witness_p == -1);
    CHECK(cert.witness_a == -1);
    CHECK(M.images.size() == M.points.size());
  }
}

TEST_CASE("model certificates for reduction actions") {
  // Z/4 acting on GF(2): not faithful, images collapse onto the line of the
  // factor field, and every non-unit acts non-invertibly
  {
    Ring Z4 = mat("Z/4");
    GfPtr F2 = make_gf_order(2);
    ProjectiveModel M = build_model(make_bimodule(Z4, F2, mod_table(Z4, F2)));
    ModelCertificate cert = verify_model(M);
    CHECK(cert.ok);
    CHECK_FALSE(cert.phi_injective);
    CHECK_FALSE(M.ann.faithful);
    CHECK(cert.injectivity_matches_faithfulness);
    CHECK(cert.nondistant_noncomplementary);
    CHECK(cert.invertible_rho_implies_unit);
    std::set<Subspace> distinct(M.images.begin(), M.images.end());
    CHECK(distinct.size() == 3);  // the whole line over GF(2)
  }

  // Z/6 acting on GF(3): 2 is not a unit yet acts invertibly, so some
  // non-distant pair must acquire complementary images
  {
    Ring Z6 = mat("Z/6");
    GfPtr F3 = make_gf_order(3);
    ProjectiveModel M = build_model(make_bimodule(Z6, F3, mod_table(Z6, F3)));
    ModelCertificate cert = verify_model(M);
    CHECK(cert.ok);
    CHECK_FALSE(cert.nondistant_noncomplementary);
    CHECK_FALSE(cert.invertible_rho_implies_unit);
    CHECK(cert.noncomplementarity_biconditional);
    CHECK(cert.witness_a == 2);
    CHECK_FALSE(cert.phi_injective);
    CHECK(cert.injectivity_matches_faithfulness);
    std::set<Subspace> distinct(M.images.begin(), M.images.end());
    CHECK(distinct.size() == 4);  // the whole line over GF(3)

    // the explicit witness pair: both points contain 2 in the second slot
    int i = point_index(M.points, Z6, 1, 0);
    int j = point_index(M.points, Z6, 1, 2);
    REQUIRE(i >= 0);
    REQUIRE(j >= 0);
    CHECK_FALSE(distant(Z6, M.points[size_t(i)], M.points[size_t(j)]));
    CHECK(is_complementary(M.images[size_t(i)], M.images[size_t(j)]));
  }

  // degenerate zero-dimensional actions are rejected by the verifier
  {
    Ring Z2 = mat("Z/2");
    GfPtr F2 = make_gf_order(2);
    std::vector<MatK> empty_table(2, MatK::zero(F2, 0, 0));
    ProjectiveModel M = build_model(make_bimodule(Z2, F2, empty_table));
    CHECK_THROWS_AS((void)verify_model(M), std::invalid_argument);
  }
}

TEST_CASE("distance transport cross-checked by stacked rank") {
  Ring R = mat("UT2(GF(2))");
  Bimodule B = regular_bimodule(R);
  ProjectiveModel M = build_model(B);
  REQUIRE(M.points.size() == 18);
  for (size_t i = 0; i < M.points.size(); ++i)
    for (size_t j = i + 1; j < M.points.size(); ++j) {
      bool full = rank(mat_vcat(M.images[i].basis(), M.images[j].basis())) == 2 * B.m;
      CHECK(distant(R, M.points[i], M.points[j]) == full);
    }
}

TEST_CASE("factor models are faithful and image equality matches surjectivity") {
  // reduction of Z/4: factor through Z/2
  {
    Ring Z4 = mat("Z/4");
    GfPtr F2 = make_gf_order(2);
    FactorComparison f = factor_representation(make_bimodule(Z4, F2, mod_table(Z4, F2)));
    CHECK(f.ok);
    CHECK(f.quotient.quotient.size() == 2);
    CHECK(f.induced_faithful);
    CHECK(f.images_contained);
    CHECK(f.images_equal);
    CHECK(f.projection_line_surjective);
    CHECK(f.equality_matches_surjectivity);
  }

  // reduction of Z/6: factor through Z/3
  {
    Ring Z6 = mat("Z/6");
    GfPtr F3 = make_gf_order(3);
    FactorComparison f = factor_representation(make_bimodule(Z6, F3, mod_table(Z6, F3)));
    CHECK(f.ok);
    CHECK(f.quotient.quotient.size() == 3);
    CHECK(f.induced_faithful);
    CHECK(f.images_equal);
    CHECK(f.projection_line_surjective);
  }

  // an already-faithful action factors through itself
  {
    FactorComparison f = factor_representation(regular_bimodule(mat("Dual(GF(2))")));
    CHECK(f.ok);
    CHECK(f.quotient.quotient.size() == 4);
    CHECK(f.images_equal);
    CHECK(f.projection_line_surjective);
  }
}

TEST_CASE("block matrices act as collineations") {
  Ring D = mat("Dual(GF(2))");
  Bimodule BD = regular_bimodule(D);
  int eps = D.k_structure()->basis[1];

  CollineationCertificate c1 = collineation_check(BD, transvection_upper(D, eps));
  CHECK(c1.ok);
  CHECK(c1.block_invertible);
  CHECK(c1.equivariant);
  CHECK(c1.block_matrix.rows == 4);

  CollineationCertificate c2 = collineation_check(BD, gamma_matrix(D, D.one(), D.one()));
  CHECK(c2.ok);

  // singular input is rejected
  CHECK_THROWS_AS((void)collineation_check(BD, Mat2{D.one(), 0, 0, eps}),
                  std::invalid_argument);

  // seeded random group words over a noncommutative carrier
  Ring U = mat("UT2(GF(2))");
  Bimodule BU = regular_bimodule(U);
  oracles::Rng rng(1729);
  for (int t = 0; t < 10; ++t) {
    Mat2 g = random_ge2_word(U, rng.g);
    Mat2 h = random_ge2_word(U, rng.g);
    CollineationCertificate cg = collineation_check(BU, g);
    CHECK(cg.ok);
    // the block construction is multiplicative
    CollineationCertificate cgh = collineation_check(BU, mat2_mul(U, g, h));
    CollineationCertificate ch = collineation_check(BU, h);
    CHECK(cgh.block_matrix == mat_mul(cg.block_matrix, ch.block_matrix));
  }
}

TEST_CASE("invariant subspace discovery") {
  // dual numbers: zero, the radical line, and everything
  {
    Ring D = mat("Dual(GF(2))");
    Bimodule B = regular_bimodule(D);
    std::vector<Subspace> inv = find_sub_bimodules(B);
    REQUIRE(inv.size() == 3);
    CHECK(inv[0].dim() == 0);
    CHECK(inv[1] == Subspace::span(B.K, 2, {{0, 1}}));
    CHECK(inv[2].dim() == 2);

    SubBimoduleWitness bad = make_sub_witness(B, Subspace::span(B.K, 2, {{1, 0}}));
    CHECK_FALSE(bad.invariant);
    CHECK(bad.violating_a == D.k_structure()->basis[1]);
    CHECK_THROWS_AS((void)sub_bimodule(B, bad), std::invalid_argument);
  }

  // triangular matrices: dims 0, 1, 1, 1, 2, 2, 3
  {
    Bimodule B = regular_bimodule(mat("UT2(GF(2))"));
    std::vector<Subspace> inv = find_sub_bimodules(B);
    REQUIRE(inv.size() == 7);
    std::vector<int> dims;
    for (const Subspace& w : inv) dims.push_back(w.dim());
    CHECK(dims == std::vector<int>{0, 1, 1, 1, 2, 2, 3});
    CHECK_THROWS_AS((void)find_sub_bimodules(B, 2), std::invalid_argument);
  }

  // full matrices: zero, three column ideals, and everything
  {
    Bimodule B = regular_bimodule(mat("M2(GF(2))"));
    std::vector<Subspace> inv = find_sub_bimodules(B);
    REQUIRE(inv.size() == 5);
    std::vector<int> dims;
    for (const Subspace& w : inv) dims.push_back(w.dim());
    CHECK(dims == std::vector<int>{0, 2, 2, 2, 4});
  }

  // wrong ambient space is rejected
  {
    Bimodule B = regular_bimodule(mat("Dual(GF(2))"));
    CHECK_THROWS_AS((void)make_sub_witness(B, Subspace::span(B.K, 3, {{1, 0, 0}})),
                    std::invalid_argument);
  }

  // cross-check: matrix invariance agrees with closure under the ring
  // operations on coordinate members, over every subspace of the module
  for (const char* text : {"Dual(GF(2))", "UT2(GF(2))", "M2(GF(2))"}) {
    CAPTURE(text);
    Ring R = mat(text);
    Bimodule B = regular_bimodule(R);
    std::set<Subspace> invariant;
    for (const Subspace& w : find_sub_bimodules(B)) invariant.insert(w);
    for (int r = 0; r <= B.m; ++r)
      for (const Subspace& w : all_subspaces(B.K, B.m, r)) {
        bool closed = closed_under_ring_action(R, coord_members(R, w));
        CHECK(closed == (invariant.count(w) > 0));
      }
  }
}

TEST_CASE("restricted actions in subspace coordinates") {
  // top row of the triangular carrier: the restriction reproduces the
  // defining two-dimensional action and stays faithful
  {
    Ring R = mat("UT2(GF(2))");
    Bimodule B = regular_bimodule(R);
    const auto& ks = *R.k_structure();
    SubBimoduleWitness W =
        make_sub_witness(B, Subspace::span(B.K, 3, {{1, 0, 0}, {0, 1, 0}}));
    REQUIRE(W.invariant);
    Bimodule S = sub_bimodule(B, W);
    REQUIRE(S.m == 2);
    for (int a = 0; a < R.size(); ++a) {
      uint8_t x = ks.coords[a][0], y = ks.coords[a][1], z = ks.coords[a][2];
      CHECK(S.rho[a] == MatK::from_rows(B.K, {{x, y}, {0, z}}, 2));
    }
    CHECK(annihilator_and_faithful(S).faithful);
  }

  // radical line of the dual numbers: the restriction is the residue action
  {
    Ring D = mat("Dual(GF(2))");
    Bimodule B = regular_bimodule(D);
    const auto& ks = *D.k_structure();
    SubBimoduleWitness W = make_sub_witness(B, Subspace::span(B.K, 2, {{0, 1}}));
    REQUIRE(W.invariant);
    Bimodule S = sub_bimodule(B, W);
    REQUIRE(S.m == 1);
    for (int a = 0; a < D.size(); ++a)
      CHECK(S.rho[a] == MatK::from_rows(B.K, {{ks.coords[a][0]}}, 1));
    AnnihilatorReport rep = annihilator_and_faithful(S);
    CHECK_FALSE(rep.faithful);
    CHECK(rep.annihilator.members == std::vector<int>{0, ks.basis[1]});
    CHECK(rep.annihilator.members == D.radical());
  }
}

TEST_CASE("restriction comparison: images meet the doubled subspace") {
  Ring D = mat("Dual(GF(2))");
  Bimodule BD = regular_bimodule(D);
  Ring U = mat("UT2(GF(2))");
  Bimodule BU = regular_bimodule(U);
  Ring M = mat("M2(GF(2))");
  Bimodule BM = regular_bimodule(M);

  auto run = [](const Bimodule& B, const std::vector<Row>& rows) {
    SubBimoduleWitness W =
        make_sub_witness(B, Subspace::span(B.K, B.m, rows));
    REQUIRE(W.invariant);
    SubModelCertificate cert = sub_bimodule_model(B, W);
    CHECK(cert.ok);
    CHECK(cert.equality);
    CHECK(cert.witness_point == -1);
    CHECK(cert.doubled.dim() == 2 * W.space.dim());
    return cert;
  };

  run(BD, {{0, 1}});
  run(BU, {{0, 1, 0}});
  run(BU, {{0, 0, 1}});
  SubModelCertificate top = run(BU, {{1, 0, 0}, {0, 1, 0}});
  CHECK(top.restricted_ann.faithful);
  run(BM, {{1, 0, 0, 0}, {0, 1, 0, 0}});
}

TEST_CASE("decomposition comparison: images split along invariant parts") {
  // triangular carrier: top row plus the lower-corner line
  {
    Bimodule B = regular_bimodule(mat("UT2(GF(2))"));
    SubBimoduleWitness W1 =
        make_sub_witness(B, Subspace::span(B.K, 3, {{1, 0, 0}, {0, 1, 0}}));
    SubBimoduleWitness W2 = make_sub_witness(B, Subspace::span(B.K, 3, {{0, 0, 1}}));
    REQUIRE(W1.invariant);
    REQUIRE(W2.invariant);
    DirectSumCertificate cert = direct_sum_model(B, W1, W2);
    CHECK(cert.valid_decomposition);
    CHECK(cert.equality);
    CHECK(cert.ok);
  }

  // full matrices: top row ideal plus bottom row ideal
  {
    Bimodule B = regular_bimodule(mat("M2(GF(2))"));
    SubBimoduleWitness W1 =
        make_sub_witness(B, Subspace::span(B.K, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    SubBimoduleWitness W2 =
        make_sub_witness(B, Subspace::span(B.K, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
    REQUIRE(W1.invariant);
    REQUIRE(W2.invariant);
    DirectSumCertificate cert = direct_sum_model(B, W1, W2);
    CHECK(cert.valid_decomposition);
    CHECK(cert.equality);
    CHECK(cert.ok);
  }

  // parts that overlap are not a decomposition
  {
    Bimodule B = regular_bimodule(mat("Dual(GF(2))"));
    SubBimoduleWitness W = make_sub_witness(B, Subspace::span(B.K, 2, {{0, 1}}));
    DirectSumCertificate cert = direct_sum_model(B, W, W);
    CHECK_FALSE(cert.valid_decomposition);
    CHECK_FALSE(cert.ok);
  }
}

TEST_CASE("quotient comparison: lifted images join the doubled subspace") {
  // dual numbers modulo the radical line
  {
    Ring D = mat("Dual(GF(2))");
    Bimodule B = regular_bimodule(D);
    const auto& ks = *D.k_structure();
    SubBimoduleWitness W = make_sub_witness(B, Subspace::span(B.K, 2, {{0, 1}}));
    QuotientModelCertificate cert = quotient_model(B, W);
    CHECK(cert.ok);
    CHECK(cert.equality);
    CHECK(cert.kernel_matches);
    CHECK(cert.kernel == std::vector<int>({0, ks.basis[1]}));
    REQUIRE(cert.quotient_action.m == 1);
    for (int a = 0; a < D.size(); ++a)
      CHECK(cert.quotient_action.rho[a] ==
            MatK::from_rows(B.K, {{ks.coords[a][0]}}, 1));
  }

  // triangular carrier modulo the strictly-upper line
  {
    Ring R = mat("UT2(GF(2))");
    Bimodule B = regular_bimodule(R);
    const auto& ks = *R.k_structure();
    SubBimoduleWitness W = make_sub_witness(B, Subspace::span(B.K, 3, {{0, 1, 0}}));
    QuotientModelCertificate cert = quotient_model(B, W);
    CHECK(cert.ok);
    CHECK(cert.kernel == std::vector<int>({0, ks.basis[1]}));
    CHECK(cert.quotient_action.m == 2);
  }

  // triangular carrier modulo its top row: the quotient action reads off the
  // lower-corner entry and kills the whole top plane
  {
    Ring R = mat("UT2(GF(2))");
    Bimodule B = regular_bimodule(R);
    const auto& ks = *R.k_structure();
    SubBimoduleWitness W =
        make_sub_witness(B, Subspace::span(B.K, 3, {{1, 0, 0}, {0, 1, 0}}));
    QuotientModelCertificate cert = quotient_model(B, W);
    CHECK(cert.ok);
    std::vector<int> expected;
    for (int a = 0; a < R.size(); ++a)
      if (ks.coords[a][2] == 0) expected.push_back(a);
    CHECK(cert.kernel == expected);
    REQUIRE(cert.quotient_action.m == 1);
    for (int a = 0; a < R.size(); ++a)
      CHECK(cert.quotient_action.rho[a] ==
            MatK::from_rows(B.K, {{ks.coords[a][2]}}, 1));
  }

  // full matrices modulo the top row ideal: the quotient action is the
  // natural two-dimensional one, read straight from the matrix entries
  {
    Ring M = mat("M2(GF(2))");
    Bimodule B = regular_bimodule(M);
    const auto& ks = *M.k_structure();
    SubBimoduleWitness W =
        make_sub_witness(B, Subspace::span(B.K, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    QuotientModelCertificate cert = quotient_model(B, W);
    CHECK(cert.ok);
    CHECK(cert.kernel == std::vector<int>{0});
    REQUIRE(cert.quotient_action.m == 2);
    for (int a = 0; a < M.size(); ++a) {
      const Row& c = ks.coords[a];
      CHECK(cert.quotient_action.rho[a] ==
            MatK::from_rows(B.K, {{c[0], c[1]}, {c[2], c[3]}}, 2));
    }
  }
}
