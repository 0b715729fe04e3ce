#include "ringline/ring.hpp"

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "ringline/spec_parse.hpp"

using namespace ringline;

namespace {
Ring mat(const std::string& spec) { return materialize(parse_ring_spec(spec)); }
}  // namespace

TEST_CASE("modular rings: units, radical, characteristic") {
  Ring R6 = mat("Z/6");
  CHECK(R6.size() == 6);
  CHECK(R6.units() == std::vector<int>{1, 5});
  CHECK(R6.inverse(5) == 5);
  CHECK(R6.radical() == std::vector<int>{0});
  CHECK(R6.characteristic() == 6);
  CHECK(R6.commutative());

  Ring R4 = mat("Z/4");
  CHECK(R4.radical() == std::vector<int>{0, 2});
  CHECK(R4.units() == std::vector<int>{1, 3});
  CHECK(R4.inverse(3) == 3);
  CHECK(R4.inverse(2) == -1);

  for (long n : {2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L}) {
    Ring R = mat("Z/" + std::to_string(n));
    CHECK(R.units() == oracles::units_scan(R));
    CHECK(R.radical() == oracles::radical_scan(R));
    CHECK(R.characteristic() == n);
  }
}

TEST_CASE("the one-element ring is fully supported") {
  Ring R = mat("Z/1");
  CHECK(R.size() == 1);
  CHECK(R.one() == 0);
  CHECK(R.units() == std::vector<int>{0});
  CHECK(R.inverse(0) == 0);
  CHECK(R.radical() == std::vector<int>{0});
  CHECK(R.characteristic() == 1);
}

TEST_CASE("galois field carriers") {
  Ring F4 = mat("GF(4)");
  CHECK(F4.size() == 4);
  CHECK(F4.units() == std::vector<int>{1, 2, 3});
  CHECK(F4.radical() == std::vector<int>{0});
  CHECK(F4.characteristic() == 2);
  CHECK(F4.k_structure());
  CHECK(F4.k_structure()->dim == 1);
  CHECK(F4.k_structure()->field->modulus_text() == "x^2+x+1");
}

TEST_CASE("dual numbers: radical, units, twist") {
  Ring D3 = mat("Dual(GF(3))");
  CHECK(D3.size() == 9);
  CHECK(D3.characteristic() == 3);
  // radical = multiples of eps
  int eps = oracles::find_by_text(D3, "(0,1)");
  int two_eps = oracles::find_by_text(D3, "(0,2)");
  REQUIRE(eps >= 0);
  CHECK(D3.radical() == std::vector<int>{0, eps, two_eps});
  CHECK(D3.units().size() == 6);
  CHECK(D3.units() == oracles::units_scan(D3));
  CHECK(D3.mul(eps, eps) == 0);
  CHECK(D3.commutative());

  // an identity twist changes nothing over a prime field
  Ring D2 = mat("Dual(GF(2))");
  Ring D2t = mat("Dual(GF(2),frob^1)");
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(D2.mul(a, b) == D2t.mul(a, b));

  // over GF(4) the twist makes the carrier noncommutative: eps*k = frob(k)*eps
  Ring D4 = mat("Dual(GF(4),frob^1)");
  CHECK(D4.size() == 16);
  CHECK_FALSE(D4.commutative());
  GfPtr F = D4.k_structure()->field;
  int e4 = oracles::find_by_text(D4, "(0,1)");
  REQUIRE(e4 >= 0);
  for (int k = 0; k < 4; ++k) {
    int kc = oracles::find_by_text(D4, "(" + std::to_string(k) + ",0)");
    int lhs = D4.mul(e4, kc);
    int expect = oracles::find_by_text(D4, "(0," + std::to_string(F->frobenius(k)) + ")");
    CHECK(lhs == expect);
  }
  CHECK(D4.units() == oracles::units_scan(D4));
  CHECK(D4.radical().size() == 4);
}

TEST_CASE("two nilpotents: units and radical") {
  Ring E = mat("EpsDelta(GF(2))");
  CHECK(E.size() == 8);
  // exhaustive inverse search: exactly the four elements with constant term 1
  CHECK(E.units() == oracles::units_scan(E));
  CHECK(E.units().size() == 4);
  for (int u : E.units()) CHECK(E.inverse(u) == u);  // char 2, square-zero part
  CHECK(E.radical().size() == 4);
  CHECK(E.radical() == oracles::radical_scan(E));
  int eps = oracles::find_by_text(E, "(0,1,0)");
  int del = oracles::find_by_text(E, "(0,0,1)");
  CHECK(E.mul(eps, del) == 0);
  CHECK(E.mul(eps, eps) == 0);
  CHECK(E.mul(del, del) == 0);
  CHECK(E.commutative());
}

TEST_CASE("upper triangular carrier") {
  Ring T = mat("UT2(GF(2))");
  CHECK(T.size() == 8);
  CHECK(T.one() == 1);
  CHECK(T.element_text(T.one()) == "[1,0;0,1]");
  CHECK(T.units() == oracles::units_scan(T));
  CHECK(T.units().size() == 2);
  CHECK_FALSE(T.commutative());
  int e12 = oracles::find_by_text(T, "[0,1;0,0]");
  int e11 = oracles::find_by_text(T, "[1,0;0,0]");
  int e22 = oracles::find_by_text(T, "[0,0;0,1]");
  REQUIRE(e12 >= 0);
  CHECK(T.mul(e12, e12) == 0);
  CHECK(T.mul(e11, e12) == e12);
  CHECK(T.mul(e12, e11) == 0);
  CHECK(T.mul(e12, e22) == e12);
  CHECK(T.add(e11, e22) == T.one());
  CHECK(T.radical() == std::vector<int>{0, e12});
}

TEST_CASE("matrix carrier over a field") {
  Ring M = mat("M2(GF(2))");
  CHECK(M.size() == 16);
  CHECK(M.units().size() == 6);  // invertible 2x2 matrices over GF(2)
  CHECK(M.units() == oracles::units_scan(M));
  CHECK(M.radical() == std::vector<int>{0});
  CHECK_FALSE(M.commutative());
  CHECK(M.characteristic() == 2);
  CHECK(M.k_structure());
  CHECK(M.k_structure()->dim == 4);
  CHECK(M.element_text(M.one()) == "[1,0;0,1]");
}

TEST_CASE("product carriers") {
  Ring P = mat("Z/2xZ/3");
  CHECK(P.size() == 6);
  CHECK(P.characteristic() == 6);
  CHECK(P.units().size() == 2);
  CHECK_FALSE(P.k_structure());  // mixed factors, no diagonal subfield

  // products of one field embed it diagonally
  Ring P2 = mat("GF(3)xGF(3)");
  REQUIRE(P2.k_structure());
  CHECK(P2.k_structure()->dim == 2);
  CHECK(P2.units().size() == 4);

  // coordinatewise reduction Z/6 -> Z/2 x Z/3 is an isomorphism
  Ring R6 = mat("Z/6");
  RingHom h{R6, P, std::vector<int>(6)};
  for (int x = 0; x < 6; ++x) {
    std::string want = "(" + std::to_string(x % 2) + "," + std::to_string(x % 3) + ")";
    h.map[x] = oracles::find_by_text(P, want);
  }
  CHECK(validate_hom(h).ok);
  CHECK(h.injective());
  CHECK(h.surjective());
}

TEST_CASE("ideal closure and membership") {
  Ring R6 = mat("Z/6");
  CHECK(ideal_closure(R6, {2}).members == std::vector<int>{0, 2, 4});
  CHECK(ideal_closure(R6, {3}).members == std::vector<int>{0, 3});
  CHECK(ideal_closure(R6, {}).members == std::vector<int>{0});
  CHECK(ideal_closure(R6, {1}).members.size() == 6);
  CHECK(is_two_sided_ideal(R6, {0, 3}));
  CHECK_FALSE(is_two_sided_ideal(R6, {0, 1}));
  CHECK_FALSE(is_two_sided_ideal(R6, {3}));  // missing zero

  Ring T = mat("UT2(GF(2))");
  int e12 = oracles::find_by_text(T, "[0,1;0,0]");
  Ideal I = ideal_closure(T, {e12});
  CHECK(I.members == std::vector<int>{0, e12});  // closed two-sided already
  CHECK(I.contains(e12));
  CHECK_FALSE(I.contains(T.one()));
  // a one-sided check: e11 generates more than {0, e11} two-sidedly
  int e11 = oracles::find_by_text(T, "[1,0;0,0]");
  CHECK(ideal_closure(T, {e11}).members.size() > 2);
}

TEST_CASE("quotient rings use minimal representatives") {
  Ring R6 = mat("Z/6");
  QuotientResult q = quotient_ring(R6, {3});
  CHECK(q.quotient.size() == 3);
  CHECK(q.reps == std::vector<int>{0, 1, 2});
  CHECK(q.projection.map == std::vector<int>{0, 1, 2, 0, 1, 2});
  CHECK(validate_hom(q.projection).ok);
  CHECK(q.projection.kernel() == q.ideal.members);

  QuotientResult q2 = quotient_ring(R6, {2});
  CHECK(q2.quotient.size() == 2);
  CHECK(q2.quotient.one() == 1);

  Ring D3 = mat("Dual(GF(3))");
  int eps = oracles::find_by_text(D3, "(0,1)");
  QuotientResult q3 = quotient_ring(D3, {eps});
  CHECK(q3.quotient.size() == 3);
  CHECK(q3.quotient.units().size() == 2);  // a field of three elements

  // quotient through the DSL
  Ring Q = mat("Quot(Z/4;2)");
  CHECK(Q.size() == 2);
  CHECK(Q.one() == 1);

  // quotient by a unit collapses everything
  Ring Q1 = materialize(RingSpec::quotient(RingSpec::mod_int(6), {5}));
  CHECK(Q1.size() == 1);
}

TEST_CASE("hom validation and canonical maps") {
  Ring R4 = mat("Z/4"), R2 = mat("Z/2"), R6 = mat("Z/6"), R3 = mat("Z/3");
  RingHom h = zmod_hom(R4, R2);
  CHECK(validate_hom(h).ok);
  CHECK(h.kernel() == std::vector<int>{0, 2});
  CHECK(h.surjective());
  CHECK_FALSE(h.injective());

  CHECK(validate_hom(zmod_hom(R6, R3)).ok);
  CHECK_THROWS_AS(zmod_hom(R6, R4), std::invalid_argument);

  RingHom broken{R4, R2, {0, 0, 0, 0}};
  HomCheck c = validate_hom(broken);
  CHECK_FALSE(c.ok);
  CHECK(c.violation == "unit");

  RingHom twisted{R4, R2, {0, 1, 1, 0}};
  CHECK_FALSE(validate_hom(twisted).ok);

  RingHom id = identity_hom(R6);
  CHECK(validate_hom(id).ok);
  CHECK(validate_hom(compose(zmod_hom(R6, R3), identity_hom(R3))).ok);
  RingHom through = compose(zmod_hom(mat("Z/8"), R4), zmod_hom(R4, R2));
  CHECK(validate_hom(through).ok);
  CHECK(through.map == zmod_hom(mat("Z/8"), R2).map);
}

TEST_CASE("finite carriers are Dedekind-finite with stable rank 2") {
  for (const char* s : {"Z/4", "Z/6", "GF(8)", "Dual(GF(3))", "UT2(GF(2))",
                        "EpsDelta(GF(2))", "Z/2xZ/3", "M2(GF(2))"}) {
    Ring R = mat(s);
    CHECK(is_dedekind_finite(R).dedekind_finite);
    CHECK(has_stable_rank_2(R).holds);
  }
}

TEST_CASE("op-table files round-trip and are re-indexed") {
  Ring R6 = mat("Z/6");
  std::string path = "ring_z6_table.txt";
  write_table_file(R6, path);
  Ring T = materialize(RingSpec::table(path));
  CHECK(T.size() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      CHECK(T.add(a, b) == R6.add(a, b));
      CHECK(T.mul(a, b) == R6.mul(a, b));
    }
  std::remove(path.c_str());

  // scrambled indices: old code i carries the value (i+1) mod 3, so zero sits
  // at old 2 and one at old 0; the loader must normalize to 0 and 1
  {
    std::ofstream out("ring_scrambled.txt");
    out << "3 2 0\n";
    auto val = [](int i) { return (i + 1) % 3; };
    auto idx = [](int v) { return (v + 2) % 3; };
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) out << (j ? " " : "") << idx((val(i) + val(j)) % 3);
      out << "\n";
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) out << (j ? " " : "") << idx((val(i) * val(j)) % 3);
      out << "\n";
    }
  }
  Ring S = materialize(RingSpec::table("ring_scrambled.txt"));
  Ring R3 = mat("Z/3");
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(S.add(a, b) == R3.add(a, b));
      CHECK(S.mul(a, b) == R3.mul(a, b));
    }
  std::remove("ring_scrambled.txt");

  // a corrupted table is rejected with an axiom violation
  {
    std::ofstream out("ring_bad.txt");
    out << "2 0 1\n0 1\n1 0\n0 0\n0 0\n";  // multiplication loses the identity
  }
  CHECK_THROWS_AS(materialize(RingSpec::table("ring_bad.txt")), std::invalid_argument);
  std::remove("ring_bad.txt");

  CHECK_THROWS_AS(materialize(RingSpec::table("no_such_file.txt")), std::invalid_argument);
}

TEST_CASE("materialization ceilings are enforced") {
  MaterializeOptions opt;
  opt.size_ceiling = 50;
  CHECK_THROWS_AS(materialize(parse_ring_spec("M2(GF(3))"), opt), std::invalid_argument);
  CHECK_NOTHROW(materialize(parse_ring_spec("M2(GF(3))")));  // 81 fits the default
  Ring big = materialize(parse_ring_spec("M3(GF(2))"));      // structured, above table threshold
  CHECK(big.size() == 512);
  CHECK(big.units().size() == 168);  // invertible 3x3 matrices over GF(2)
  CHECK(big.one() == 1);
  CHECK(big.mul(big.one(), 300) == 300);
}

TEST_CASE("distinguished subfield coordinates") {
  Ring D = mat("Dual(GF(3))");
  const auto& ks = D.k_structure();
  REQUIRE(ks);
  CHECK(ks->dim == 2);
  CHECK(ks->basis[0] == D.one());
  CHECK(ks->coords[oracles::find_by_text(D, "(2,1)")] == std::vector<uint8_t>{2, 1});
  // coordinates are additive
  for (int a = 0; a < D.size(); ++a)
    for (int b = 0; b < D.size(); ++b) {
      auto sum = ks->coords[D.add(a, b)];
      for (int i = 0; i < 2; ++i)
        CHECK(sum[i] == ks->field->add(ks->coords[a][i], ks->coords[b][i]));
    }
  CHECK_FALSE(mat("Z/4").k_structure());
  CHECK_FALSE(mat("Z/6").k_structure());
  REQUIRE(mat("UT2(GF(2))").k_structure());
  CHECK(mat("UT2(GF(2))").k_structure()->dim == 3);
}
