#include "ringline/exact.hpp"

#include <stdexcept>

namespace ringline {
namespace {

void require_prime_field(const GfPtr& F, const char* who) {
  if (!F) throw std::invalid_argument(std::string(who) + ": empty field handle");
  if (F->k() != 1)
    throw std::invalid_argument(std::string(who) + ": coefficients need a prime field");
}

Poly trimmed(GfPtr F, std::vector<uint8_t> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return Poly{std::move(F), std::move(c)};
}

void require_same_field(const Poly& a, const Poly& b) {
  if (!a.F || !b.F || !a.F->same(*b.F))
    throw std::invalid_argument("polynomial operands over different fields");
}

}  // namespace

BigRat make_big_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_big_rat: zero denominator");
  return BigRat(num) / BigRat(den);
}

Poly poly(GfPtr F, const std::vector<int>& coeffs) {
  require_prime_field(F, "poly");
  const int p = F->p();
  std::vector<uint8_t> c;
  c.reserve(coeffs.size());
  for (int v : coeffs) c.push_back(uint8_t(((v % p) + p) % p));
  return trimmed(std::move(F), std::move(c));
}

Poly poly_zero(GfPtr F) { return poly(std::move(F), {}); }
Poly poly_one(GfPtr F) { return poly(std::move(F), {1}); }
Poly poly_x(GfPtr F) { return poly(std::move(F), {0, 1}); }
Poly poly_const(GfPtr F, int a) { return poly(std::move(F), {a}); }

Poly poly_add(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  std::vector<uint8_t> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    int x = i < a.c.size() ? a.c[i] : 0;
    int y = i < b.c.size() ? b.c[i] : 0;
    c[i] = uint8_t(a.F->add(x, y));
  }
  return trimmed(a.F, std::move(c));
}

Poly poly_neg(const Poly& a) {
  std::vector<uint8_t> c(a.c);
  for (uint8_t& x : c) x = uint8_t(a.F->neg(x));
  return Poly{a.F, std::move(c)};
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return poly_zero(a.F);
  std::vector<uint8_t> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = uint8_t(a.F->add(c[i + j], a.F->mul(a.c[i], b.c[j])));
  return trimmed(a.F, std::move(c));
}

Poly poly_scale(const Poly& a, int s) {
  const int p = a.F->p();
  const int r = ((s % p) + p) % p;
  std::vector<uint8_t> c(a.c);
  for (uint8_t& x : c) x = uint8_t(a.F->mul(x, r));
  return trimmed(a.F, std::move(c));
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
  const GfPtr& F = a.F;
  std::vector<uint8_t> rem(a.c);
  std::vector<uint8_t> quot;
  const int db = b.degree();
  const int lead_inv = F->inv(b.leading());
  if (int(rem.size()) - 1 >= db) quot.assign(rem.size() - size_t(db), 0);
  while (int(rem.size()) - 1 >= db && !rem.empty()) {
    const int dr = int(rem.size()) - 1;
    const int coef = F->mul(rem.back(), lead_inv);
    quot[size_t(dr - db)] = uint8_t(coef);
    for (int i = 0; i <= db; ++i) {
      const size_t at = size_t(dr - db + i);
      rem[at] = uint8_t(F->sub(rem[at], F->mul(coef, b.c[size_t(i)])));
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return PolyDivMod{trimmed(F, std::move(quot)), trimmed(F, std::move(rem))};
}

bool poly_divides(const Poly& b, const Poly& a) { return poly_divmod(a, b).rem.is_zero(); }

Poly poly_monic(const Poly& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  return poly_scale(a, a.F->inv(a.leading()));
}

bool poly_is_unit(const Poly& a) { return a.degree() == 0; }

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).rem;
    x = y;
    y = r;
  }
  return poly_monic(x);
}

PolyGcdExt poly_gcd_ext(const Poly& a, const Poly& b) {
  // invariant: x = u0*a + v0*b and y = u1*a + v1*b
  Poly x = a, y = b;
  Poly u0 = poly_one(a.F), v0 = poly_zero(a.F);
  Poly u1 = poly_zero(a.F), v1 = poly_one(a.F);
  while (!y.is_zero()) {
    PolyDivMod d = poly_divmod(x, y);
    Poly u2 = poly_sub(u0, poly_mul(d.quot, u1));
    Poly v2 = poly_sub(v0, poly_mul(d.quot, v1));
    x = y;
    y = d.rem;
    u0 = u1;
    v0 = v1;
    u1 = u2;
    v1 = v2;
  }
  if (!x.is_zero() && x.leading() != 1) {
    const int s = a.F->inv(x.leading());
    x = poly_scale(x, s);
    u0 = poly_scale(u0, s);
    v0 = poly_scale(v0, s);
  }
  return PolyGcdExt{x, u0, v0};
}

std::string poly_text(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const int c = a.c[size_t(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += "X";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

RatFunc ratfunc(const Poly& num, const Poly& den) {
  require_same_field(num, den);
  if (den.is_zero()) throw std::invalid_argument("ratfunc: zero denominator");
  if (num.is_zero()) return RatFunc{poly_zero(num.F), poly_one(num.F)};
  Poly g = poly_gcd(num, den);
  Poly n = poly_divmod(num, g).quot;
  Poly d = poly_divmod(den, g).quot;
  const int s = num.F->inv(d.leading());
  return RatFunc{poly_scale(n, s), poly_scale(d, s)};
}

RatFunc rf_of(const Poly& p) { return RatFunc{p, poly_one(p.F)}; }
RatFunc rf_zero(GfPtr F) { return RatFunc{poly_zero(F), poly_one(F)}; }
RatFunc rf_one(GfPtr F) { return RatFunc{poly_one(F), poly_one(F)}; }

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
  return ratfunc(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                 poly_mul(a.den, b.den));
}

RatFunc rf_neg(const RatFunc& a) { return RatFunc{poly_neg(a.num), a.den}; }
RatFunc rf_sub(const RatFunc& a, const RatFunc& b) { return rf_add(a, rf_neg(b)); }

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
  return ratfunc(poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}

RatFunc rf_inv(const RatFunc& a) {
  if (a.is_zero()) throw std::invalid_argument("rf_inv: zero has no inverse");
  return ratfunc(a.den, a.num);
}

RatFunc rf_div(const RatFunc& a, const RatFunc& b) { return rf_mul(a, rf_inv(b)); }

std::string rf_text(const RatFunc& a) {
  if (a.den == poly_one(a.den.F)) return poly_text(a.num);
  return "(" + poly_text(a.num) + ")/(" + poly_text(a.den) + ")";
}

Poly random_poly(GfPtr F, std::mt19937& g, int max_deg) {
  const int deg = int(g() % unsigned(max_deg + 2)) - 1;  // -1 encodes zero
  if (deg < 0) return poly_zero(std::move(F));
  std::vector<int> c(size_t(deg) + 1);
  for (int i = 0; i < deg; ++i) c[size_t(i)] = int(g() % unsigned(F->p()));
  c[size_t(deg)] = 1 + int(g() % unsigned(F->p() - 1));
  return poly(std::move(F), c);
}

Poly random_poly_nonzero(GfPtr F, std::mt19937& g, int max_deg) {
  for (;;) {
    Poly p = random_poly(F, g, max_deg);
    if (!p.is_zero()) return p;
  }
}

RatFunc random_ratfunc(GfPtr F, std::mt19937& g, int max_deg) {
  Poly num = random_poly(F, g, max_deg);
  Poly den = random_poly_nonzero(F, g, max_deg);
  return ratfunc(num, den);
}

ExactSuiteReport exact_property_suite(int p, int samples, uint32_t seed) {
  ExactSuiteReport rep;
  rep.p = p;
  rep.samples = samples;
  rep.seed = seed;
  GfPtr F = make_gf(p, 1);
  std::mt19937 g(seed);

  rep.poly_ring_axioms = true;
  rep.divmod_law = true;
  rep.gcd_law = true;
  rep.rational_field_axioms = true;
  rep.big_rational_axioms = true;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.first_violation.empty()) rep.first_violation = what;
  };

  for (int t = 0; t < samples; ++t) {
    Poly a = random_poly(F, g, 5), b = random_poly(F, g, 5), c = random_poly(F, g, 5);
    if (poly_add(poly_add(a, b), c) != poly_add(a, poly_add(b, c)))
      fail(rep.poly_ring_axioms, "polynomial addition is not associative");
    if (poly_add(a, b) != poly_add(b, a))
      fail(rep.poly_ring_axioms, "polynomial addition is not commutative");
    if (poly_mul(poly_mul(a, b), c) != poly_mul(a, poly_mul(b, c)))
      fail(rep.poly_ring_axioms, "polynomial product is not associative");
    if (poly_mul(a, b) != poly_mul(b, a))
      fail(rep.poly_ring_axioms, "polynomial product is not commutative");
    if (poly_mul(a, poly_add(b, c)) != poly_add(poly_mul(a, b), poly_mul(a, c)))
      fail(rep.poly_ring_axioms, "polynomial product is not distributive");
    if (poly_mul(a, poly_one(F)) != a || poly_add(a, poly_zero(F)) != a)
      fail(rep.poly_ring_axioms, "polynomial units misbehave");
    if (!poly_sub(a, a).is_zero())
      fail(rep.poly_ring_axioms, "polynomial subtraction misses zero");
    if (!a.is_zero() && !b.is_zero() && poly_mul(a, b).degree() != a.degree() + b.degree())
      fail(rep.poly_ring_axioms, "product degree is not additive");

    Poly d = random_poly_nonzero(F, g, 4);
    PolyDivMod dm = poly_divmod(a, d);
    if (poly_add(poly_mul(dm.quot, d), dm.rem) != a)
      fail(rep.divmod_law, "division identity fails");
    if (dm.rem.degree() >= d.degree()) fail(rep.divmod_law, "remainder too large");
    if (!poly_divides(d, poly_mul(a, d))) fail(rep.divmod_law, "product not divisible");

    Poly gg = poly_gcd(a, b);
    PolyGcdExt ext = poly_gcd_ext(a, b);
    if (gg != ext.g) fail(rep.gcd_law, "plain and extended gcd disagree");
    if (a.is_zero() && b.is_zero()) {
      if (!gg.is_zero()) fail(rep.gcd_law, "gcd(0,0) is not zero");
    } else {
      if (gg.is_zero() || gg.leading() != 1) fail(rep.gcd_law, "gcd is not monic");
      if (!poly_divides(gg, a) || !poly_divides(gg, b))
        fail(rep.gcd_law, "gcd does not divide the inputs");
    }
    if (poly_add(poly_mul(ext.u, a), poly_mul(ext.v, b)) != ext.g)
      fail(rep.gcd_law, "extended gcd combination fails");
    if (!c.is_zero() && poly_gcd(poly_mul(a, c), poly_mul(b, c)) !=
                            poly_mul(poly_monic(c), poly_gcd(a, b)))
      fail(rep.gcd_law, "gcd does not scale with common factors");

    RatFunc x = random_ratfunc(F, g, 3), y = random_ratfunc(F, g, 3),
            z = random_ratfunc(F, g, 3);
    if (rf_add(rf_add(x, y), z) != rf_add(x, rf_add(y, z)))
      fail(rep.rational_field_axioms, "fraction addition is not associative");
    if (rf_mul(rf_mul(x, y), z) != rf_mul(x, rf_mul(y, z)))
      fail(rep.rational_field_axioms, "fraction product is not associative");
    if (rf_mul(x, rf_add(y, z)) != rf_add(rf_mul(x, y), rf_mul(x, z)))
      fail(rep.rational_field_axioms, "fraction product is not distributive");
    if (!rf_sub(x, x).is_zero())
      fail(rep.rational_field_axioms, "fraction subtraction misses zero");
    if (!x.is_zero() && rf_mul(x, rf_inv(x)) != rf_one(F))
      fail(rep.rational_field_axioms, "fraction inverse fails");
    for (const RatFunc& r : {x, y, z}) {
      const bool canon = r.den.leading() == 1 &&
                         (r.is_zero() ? r.den == poly_one(F)
                                      : poly_gcd(r.num, r.den) == poly_one(F));
      if (!canon) fail(rep.rational_field_axioms, "fraction left non-canonical");
    }

    auto draw = [&]() {
      BigInt n = int(g() % 2001) - 1000;
      BigInt d = 0;
      while (d == 0) d = int(g() % 2001) - 1000;
      return make_big_rat(n, d);
    };
    BigRat r1 = draw(), r2 = draw(), r3 = draw();
    if ((r1 + r2) * r3 != r1 * r3 + r2 * r3)
      fail(rep.big_rational_axioms, "rational arithmetic is not distributive");
    if (denominator(r1) <= 0)
      fail(rep.big_rational_axioms, "rational denominator not positive");
    if (gcd(numerator(r1), denominator(r1)) != 1)
      fail(rep.big_rational_axioms, "rational fraction not reduced");
  }

  rep.ok = rep.poly_ring_axioms && rep.divmod_law && rep.gcd_law &&
           rep.rational_field_axioms && rep.big_rational_axioms;
  return rep;
}

}  // namespace ringline
