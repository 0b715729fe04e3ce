// Finite field GF(p^k) with table-driven arithmetic.
//
// Elements are encoded as integers in [0, q): the element with coefficient
// vector (c_0, ..., c_{k-1}) over Z/p (relative to the power basis of the
// modulus) has code sum_i c_i p^i.  Code 0 is zero, code 1 is one.
#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ringline {

class Gf;
using GfPtr = std::shared_ptr<const Gf>;

class Gf {
public:
  // modulus: monic of degree k, little-endian coefficients (length k+1),
  // entries in [0, p).  Empty selects default_modulus(p, k).  The modulus is
  // verified irreducible either way.
  Gf(int p, int k, std::vector<int> modulus = {});

  static bool is_prime(long n);
  // Factors n = p^k with p prime; false when n is not a prime power or n < 2.
  static bool prime_power(long n, long* p, int* k);
  // Lexicographically least monic irreducible of degree k over Z/p, where
  // candidates X^k + t are ordered by the integer code of the tail t.
  static std::vector<int> default_modulus(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const { return inv_[a]; }  // -1 for zero
  int div(int a, int b) const;              // errors on b == 0
  int pow(int a, long e) const;
  // x -> x^(p^power); power may be any integer, reduced mod k
  int frobenius(int x, int power = 1) const;

  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_text() const;  // e.g. "x^2+x+1"
  std::string element_text(int a) const;

  bool same(const Gf& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

private:
  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<uint16_t> add_, mul_;
  std::vector<int> neg_, inv_;
};

GfPtr make_gf(int p, int k, std::vector<int> modulus = {});
GfPtr make_gf_order(long q);  // q = p^k, errors when q is not a prime power

// Code of a root of `poly` (little-endian Z/p coefficients, interpreted in F
// through the prime field) or -1 when none exists.
int find_root(const Gf& F, const std::vector<int>& poly);

// Tables realizing `sub` as the subfield of `big` of its order.  Requires the
// same characteristic and sub->k() dividing big->k().
struct SubfieldEmbedding {
  GfPtr sub, big;
  std::vector<int> into;  // sub code -> big code
  std::vector<int> back;  // big code -> sub code, -1 off the subfield
};
SubfieldEmbedding embed_subfield(GfPtr sub, GfPtr big);

}  // namespace ringline
