#include "ringline/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ringline {

namespace {

// Dense little-endian polynomials over Z/p, trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  trim(h);
  return h;
}

// Remainder of f by monic g.
Poly poly_rem(Poly f, const Poly& g, int p) {
  trim(f);
  while (f.size() >= g.size()) {
    int c = f.back();
    size_t shift = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) {
      int& t = f[shift + i];
      t = ((t - c * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

bool poly_divides(const Poly& d, const Poly& f, int p) {
  return poly_rem(f, d, p).empty();
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Poly decode_poly(long code, int p, int k) {
  Poly f(k, 0);
  for (int i = 0; i < k; ++i, code /= p) f[i] = int(code % p);
  trim(f);
  return f;
}

// All monic polynomials of exact degree d over Z/p.
std::vector<Poly> monic_of_degree(int d, int p) {
  std::vector<Poly> out;
  long count = ipow(p, d);
  for (long t = 0; t < count; ++t) {
    Poly f = decode_poly(t, p, d);
    f.resize(d + 1, 0);
    f[d] = 1;
    out.push_back(f);
  }
  return out;
}

bool is_irreducible(const Poly& f, int p) {
  int deg = int(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; d <= deg / 2; ++d)
    for (const Poly& g : monic_of_degree(d, p))
      if (poly_divides(g, f, p)) return false;
  return true;
}

}  // namespace

bool Gf::is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool Gf::prime_power(long n, long* p, int* k) {
  if (n < 2) return false;
  long base = n;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      base = d;
      break;
    }
  long m = n;
  int e = 0;
  while (m % base == 0) {
    m /= base;
    ++e;
  }
  if (m != 1) return false;
  if (p) *p = base;
  if (k) *k = e;
  return true;
}

std::vector<int> Gf::default_modulus(int p, int k) {
  if (k == 1) return {0, 1};  // X itself; arithmetic is plain Z/p
  long tails = ipow(p, k);
  for (long t = 0; t < tails; ++t) {
    Poly f = decode_poly(t, p, k);
    f.resize(k + 1, 0);
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Gf::Gf(int p, int k, std::vector<int> modulus) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("field degree must be >= 1");
  long q = ipow(p, k);
  if (q > 512) throw std::invalid_argument("field order above supported bound 512");
  q_ = int(q);
  modulus_ = modulus.empty() ? default_modulus(p, k) : std::move(modulus);
  if (int(modulus_.size()) != k + 1 || modulus_[k] != 1)
    throw std::invalid_argument("modulus must be monic of the field degree");
  for (int c : modulus_)
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (k > 1 && !is_irreducible(modulus_, p))
    throw std::invalid_argument("modulus is reducible");

  add_.resize(size_t(q_) * q_);
  mul_.resize(size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, -1);
  for (int a = 0; a < q_; ++a) {
    Poly fa = decode_poly(a, p_, k_);
    for (int b = 0; b < q_; ++b) {
      Poly fb = decode_poly(b, p_, k_);
      Poly s(std::max(fa.size(), fb.size()), 0);
      for (size_t i = 0; i < fa.size(); ++i) s[i] = fa[i];
      for (size_t i = 0; i < fb.size(); ++i) s[i] = (s[i] + fb[i]) % p_;
      long sc = 0;
      for (size_t i = s.size(); i-- > 0;) sc = sc * p_ + s[i];
      add_[size_t(a) * q_ + b] = uint16_t(sc);
      Poly m = poly_rem(poly_mul(fa, fb, p_), modulus_, p_);
      long mc = 0;
      for (size_t i = m.size(); i-- > 0;) mc = mc * p_ + m[i];
      mul_[size_t(a) * q_ + b] = uint16_t(mc);
    }
  }
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      if (add_[size_t(a) * q_ + b] == 0) neg_[a] = b;
      if (mul_[size_t(a) * q_ + b] == 1) inv_[a] = b;
    }
  for (int a = 1; a < q_; ++a)
    if (inv_[a] < 0) throw std::logic_error("nonzero element without inverse");
}

int Gf::div(int a, int b) const {
  if (b == 0) throw std::invalid_argument("division by zero");
  return mul(a, inv_[b]);
}

int Gf::pow(int a, long e) const {
  if (e < 0) {
    if (a == 0) throw std::invalid_argument("zero has no negative powers");
    a = inv_[a];
    e = -e;
  }
  int r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int Gf::frobenius(int x, int power) const {
  int e = ((power % k_) + k_) % k_;
  for (int i = 0; i < e; ++i) x = pow(x, p_);
  return x;
}

std::string Gf::modulus_text() const {
  std::ostringstream os;
  bool first = true;
  for (int i = k_; i >= 0; --i) {
    int c = (i < int(modulus_.size())) ? modulus_[i] : 0;
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string Gf::element_text(int a) const { return std::to_string(a); }

GfPtr make_gf(int p, int k, std::vector<int> modulus) {
  return std::make_shared<Gf>(p, k, std::move(modulus));
}

GfPtr make_gf_order(long q) {
  long p;
  int k;
  if (!Gf::prime_power(q, &p, &k))
    throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  return make_gf(int(p), k);
}

int find_root(const Gf& F, const std::vector<int>& poly) {
  for (int x = 0; x < F.q(); ++x) {
    int acc = 0;
    for (size_t i = poly.size(); i-- > 0;) {
      acc = F.mul(acc, x);
      int c = poly[i] % F.p();
      acc = F.add(acc, c % F.p());
    }
    if (acc == 0) return x;
  }
  return -1;
}

SubfieldEmbedding embed_subfield(GfPtr sub, GfPtr big) {
  if (sub->p() != big->p() || big->k() % sub->k() != 0)
    throw std::invalid_argument("no subfield of that order");
  // A root of sub's modulus inside big generates the subfield copy; for k = 1
  // the prime field embeds through repeated addition of one (code = value).
  SubfieldEmbedding e;
  e.sub = sub;
  e.big = big;
  e.into.assign(sub->q(), 0);
  e.back.assign(big->q(), -1);
  int theta = (sub->k() == 1) ? 1 : find_root(*big, sub->modulus());
  if (theta < 0) throw std::logic_error("subfield modulus has no root in the big field");
  for (int a = 0; a < sub->q(); ++a) {
    // coefficients of a in the power basis of sub map through powers of theta
    int rest = a, img = 0, tp = 1;
    for (int i = 0; i < sub->k(); ++i, rest /= sub->p()) {
      int c = rest % sub->p();
      int cc = 0;  // c * 1 in big
      for (int j = 0; j < c; ++j) cc = big->add(cc, 1);
      img = big->add(img, big->mul(cc, tp));
      tp = big->mul(tp, theta);
    }
    e.into[a] = img;
    e.back[img] = a;
  }
  return e;
}

}  // namespace ringline
