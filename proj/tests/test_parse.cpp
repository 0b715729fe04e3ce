#include "ringline/spec_parse.hpp"

#include "doctest.h"

using namespace ringline;

TEST_CASE("well-formed specs parse and round-trip through text") {
  for (const char* s : {"Z/6", "GF(9)", "M2(GF(3))", "UT2(GF(2))", "Dual(GF(4),frob^1)",
                        "EpsDelta(GF(2))", "Z/2xZ/3", "Quot(Z/4;2)", "Quot(Z/12;4,6)",
                        "M2(Z/2xZ/3)", "Dual(Z/5)", "Z/2xZ/2xZ/2"}) {
    RingSpec spec = parse_ring_spec(s);
    CHECK(spec.text() == s);
    CHECK(parse_ring_spec(spec.text()).text() == s);  // idempotent
  }
  CHECK(parse_ring_spec("Table(ops/foo.txt)").table_path == "ops/foo.txt");
  CHECK(parse_ring_spec(" Z/2 x Z/3 ").text() == "Z/2xZ/3");
  CHECK(parse_ring_spec("Dual(GF(2),frob^0)").text() == "Dual(GF(2))");
  CHECK(parse_ring_spec("GF(8)").k == 3);
  CHECK(parse_ring_spec("GF(8)").p == 2);
  CHECK(parse_ring_spec("Quot(Z/2xZ/4;3)").args[0].kind == RingSpec::Kind::Product);
}

TEST_CASE("malformed specs report a position") {
  auto pos_of = [](const char* s) -> long {
    try {
      parse_ring_spec(s);
    } catch (const SpecParseError& e) {
      return long(e.pos);
    }
    return -1;
  };
  CHECK(pos_of("GF(6)") == 0);        // not a prime power
  CHECK(pos_of("UT2(Z/4)") == 4);     // needs a field
  CHECK(pos_of("Dual(Z/6)") == 5);
  CHECK(pos_of("EpsDelta(M2(GF(2)))") == 9);
  CHECK(pos_of("Z/0") == 0);
  CHECK(pos_of("M5(GF(2))") == 0);    // dimension cap
  CHECK(pos_of("Dual(GF(2),frab^1)") == 11);
  CHECK(pos_of("Z/2y") == 3);         // trailing input
  CHECK(pos_of("Quot(Z/4)") == 8);    // missing generator list
  CHECK(pos_of("") == 0);
  CHECK(pos_of("GF(4") == 4);
  CHECK(pos_of("Table()") == 0);
  CHECK(pos_of("Z/2x") == 4);         // dangling product
  CHECK(pos_of("M2()") == 3);
}
