// Exact arithmetic kernels: univariate polynomials over a prime field, the
// rational-function field built from them, and arbitrary-precision
// integers/rationals.  Everything is kept in a canonical form so equality is
// bytewise comparison.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ringline/gf.hpp"

namespace ringline {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// num/den as a canonical fraction (reduced, positive denominator); errors on
// a zero denominator.  The underlying two-argument constructor rejects
// negative denominators instead of normalizing, so always build through this.
BigRat make_big_rat(const BigInt& num, const BigInt& den);

// Coefficients little-endian over a prime field; no trailing zero is stored,
// so the zero polynomial has an empty list and degree -1.
struct Poly {
  GfPtr F;
  std::vector<uint8_t> c;

  int degree() const { return int(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  uint8_t leading() const { return c.empty() ? uint8_t(0) : c.back(); }

  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return c != o.c; }
  bool operator<(const Poly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    return c < o.c;
  }
};

// Normalizing constructor; entries are reduced into the field, so small
// negative literals may be written as their positive residues only.
// The field must be prime (k = 1).
Poly poly(GfPtr F, const std::vector<int>& coeffs);
Poly poly_zero(GfPtr F);
Poly poly_one(GfPtr F);
Poly poly_x(GfPtr F);
Poly poly_const(GfPtr F, int a);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, int s);

struct PolyDivMod {
  Poly quot, rem;
};
// Requires b nonzero; satisfies a = quot*b + rem with deg rem < deg b.
PolyDivMod poly_divmod(const Poly& a, const Poly& b);
bool poly_divides(const Poly& b, const Poly& a);  // b | a, b nonzero

Poly poly_monic(const Poly& a);     // zero stays zero
bool poly_is_unit(const Poly& a);   // nonzero constant

// Monic greatest common divisor; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
struct PolyGcdExt {
  Poly g, u, v;  // g = u*a + v*b
};
PolyGcdExt poly_gcd_ext(const Poly& a, const Poly& b);

std::string poly_text(const Poly& a);  // e.g. "X^2+2X+1", "0"

// A fraction of polynomials in canonical form: the denominator is monic and
// coprime to the numerator; zero is 0/1.
struct RatFunc {
  Poly num, den;

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
};

RatFunc ratfunc(const Poly& num, const Poly& den);  // normalizes; den nonzero
RatFunc rf_of(const Poly& p);
RatFunc rf_zero(GfPtr F);
RatFunc rf_one(GfPtr F);

RatFunc rf_add(const RatFunc& a, const RatFunc& b);
RatFunc rf_sub(const RatFunc& a, const RatFunc& b);
RatFunc rf_neg(const RatFunc& a);
RatFunc rf_mul(const RatFunc& a, const RatFunc& b);
RatFunc rf_div(const RatFunc& a, const RatFunc& b);  // errors when b = 0
RatFunc rf_inv(const RatFunc& a);                    // errors when a = 0

std::string rf_text(const RatFunc& a);

// Deterministic generators (raw modulo draws, stable across platforms).
Poly random_poly(GfPtr F, std::mt19937& g, int max_deg);      // may be zero
Poly random_poly_nonzero(GfPtr F, std::mt19937& g, int max_deg);
RatFunc random_ratfunc(GfPtr F, std::mt19937& g, int max_deg);

// Seeded algebraic property sweep over all three arithmetic layers.  Each
// flag covers one law family; a false flag carries a text witness.
struct ExactSuiteReport {
  int p = 0;
  int samples = 0;
  uint32_t seed = 0;
  bool poly_ring_axioms = false;
  bool divmod_law = false;
  bool gcd_law = false;
  bool rational_field_axioms = false;
  bool big_rational_axioms = false;
  bool ok = false;
  std::string first_violation;
};
ExactSuiteReport exact_property_suite(int p, int samples = 10000, uint32_t seed = 1729);

}  // namespace ringline
