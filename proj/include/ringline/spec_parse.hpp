// Parser for the ring-construction DSL:
//
//   spec := term { "x" term }
//   term := "Z/" nat | "GF(" nat ")" | "M" nat "(" spec ")" | "UT2(" term ")"
//         | "Dual(" term [ "," "frob^" nat ] ")" | "EpsDelta(" term ")"
//         | "Quot(" spec ";" gens ")" | "Table(" path ")"
//   gens := nat { "," nat }
//
// Whitespace between tokens is ignored.  Errors carry the input position.
#pragma once

#include <stdexcept>
#include <string>

#include "ringline/ring.hpp"

namespace ringline {

class SpecParseError : public std::runtime_error {
public:
  SpecParseError(size_t pos, const std::string& what)
      : std::runtime_error("spec error at position " + std::to_string(pos) + ": " + what),
        pos(pos) {}
  size_t pos;
};

RingSpec parse_ring_spec(const std::string& text);

}  // namespace ringline
